//! Golden checks on the worked examples: the torus stratum in `A3`, the
//! codimension-one positroid stratum in `A5` and an `A3` pair where
//! some `Q_{i,v,w}` is decomposable.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use crate::cluster::{check_compatibility, detect_type, enumerate_class, ClassStatus, Seed, DEFAULT_CAP};
use crate::error::Result;
use crate::job::{initial_values, run_seed, JobSpec};
use crate::linalg::{Matrix, Q};
use crate::minors::{in_o, initial_minors, minor, plucker, random_q, sample_chart_point, sample_unitri, zeta, MinorSpec};
use crate::prepro::{indecomposable_pieces, is_isomorphic, LambdaModule};
use crate::strata::{initial_tilting, CategorySpec};
use crate::verify::Check;
use crate::weyl::{DynkinDiagram, Weyl};

const FIXTURE: &str = include_str!("../../fixtures/a5_codim_one.json");

/// Expected data of the `A5` example.
#[derive(Clone, Debug, Deserialize)]
pub struct Fixture {
    #[serde(rename = "type")]
    pub kind: String,
    pub v: String,
    pub w: String,
    pub word: String,
    pub j_set: Vec<usize>,
    pub frozen: Vec<usize>,
    pub dims: BTreeMap<String, Vec<usize>>,
    pub arrows: Vec<(usize, usize)>,
    pub lambda: Vec<Vec<i64>>,
    pub labels: Vec<String>,
    pub mutable_plucker: Vec<Vec<usize>>,
    pub frozen_plucker: Vec<Vec<usize>>,
    pub seeds: usize,
    pub mutable_type: String,
}

pub fn fixture() -> Fixture {
    serde_json::from_str(FIXTURE).expect("fixture is valid JSON")
}

pub fn a5_codim_one_job() -> JobSpec {
    let f = fixture();
    JobSpec::new(&f.kind, &f.v, &f.w, Some(&f.word))
}

fn check(criterion: &str, name: &str, r: Result<(bool, String)>) -> Check {
    Check::from_result(criterion, name, r)
}

/// A point of the chart together with the initial values there, avoiding
/// points where an initial variable vanishes.
pub(crate) fn chart_points(spec: &CategorySpec, seed: &Seed, count: usize, rng: &mut ChaCha8Rng) -> Result<Vec<(Matrix, Vec<Q>)>> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let x = sample_chart_point(rng)?;
        let values = initial_values(spec, seed, &x)?;
        if values.iter().all(|v| !v.is_zero()) {
            out.push((x, values));
        }
    }
    Ok(out)
}

/// The nine mutable functions of the example: eight Plücker coordinates and
/// `[145][236] - [456]`.
pub(crate) fn mutable_targets(f: &Fixture) -> Vec<(String, Box<dyn Fn(&Matrix) -> Q>)> {
    let mut out: Vec<(String, Box<dyn Fn(&Matrix) -> Q>)> = f
        .mutable_plucker
        .iter()
        .map(|c| {
            let cols = c.clone();
            let name = format!("[{}]", cols.iter().map(ToString::to_string).collect::<String>());
            (name, Box::new(move |x: &Matrix| plucker(x, &cols)) as Box<dyn Fn(&Matrix) -> Q>)
        })
        .collect();
    out.push((
        "[145][236]-[456]".into(),
        Box::new(|x: &Matrix| plucker(x, &[1, 4, 5]) * plucker(x, &[2, 3, 6]) - plucker(x, &[4, 5, 6])),
    ));
    out
}

pub fn positroid_a5(rng_seed: u64) -> Vec<Check> {
    let f = fixture();
    let job = a5_codim_one_job();
    let mut checks = Vec::new();
    let seeded = match run_seed(&job) {
        Ok(s) => s,
        Err(e) => return vec![Check::error("G1", "pipeline", &e)],
    };
    let spec = &seeded.spec;
    let t = &seeded.tilting;

    let j = spec.j_set();
    checks.push(Check::new("G1", "J-set", j == f.j_set, format!("{j:?}")));

    let dims_ok = f.dims.iter().all(|(k, d)| {
        let k: usize = k.parse().unwrap_or(0);
        t.position(k).map(|p| t.summands[p].module.dims() == d.as_slice()).unwrap_or(false)
    }) && t.indices() == f.j_set;
    checks.push(Check::new("G2", "summand dimension vectors", dims_ok, format!("indices {:?}", t.indices())));
    let frozen: Vec<usize> = t.summands.iter().filter(|s| s.frozen).map(|s| s.index).collect();
    checks.push(Check::new("G2", "projective-injective summands", frozen == f.frozen, format!("{frozen:?}")));
    let count = t.summands.len();
    checks.push(Check::new(
        "G2",
        "number of summands",
        count == spec.dimension() && count == f.j_set.len(),
        format!("{count} summands, l(w) - l(v) = {}", spec.dimension()),
    ));

    let mut arrows: Vec<(usize, usize, usize)> = t.quiver.arrow_list();
    arrows.sort_unstable();
    let mut expect: Vec<(usize, usize, usize)> = f.arrows.iter().map(|&(a, b)| (a, b, 1)).collect();
    expect.sort_unstable();
    checks.push(Check::new("G3", "Gabriel quiver", arrows == expect, format!("{} arrows", arrows.len())));
    let ty = detect_type(&t.quiver, DEFAULT_CAP).to_string();
    checks.push(Check::new("G3", "mutable part type", ty == f.mutable_type, ty));

    checks.push(Check::new("G4", "λ-matrix", t.lambda == f.lambda, String::new()));
    checks.push(check(
        "compat",
        "B^T λ on mutable rows",
        check_compatibility(&t.quiver.exchange_matrix(), &t.frozen(), &t.lambda).map(|c| {
            // regression value: twice the identity on the mutable vertices, zero elsewhere
            let n = t.summands.len();
            let mutable: Vec<usize> = (0..n).filter(|&k| !t.summands[k].frozen).collect();
            let expect: Vec<Vec<i64>> =
                mutable.iter().map(|&k| (0..n).map(|j| if j == k { 2 } else { 0 }).collect()).collect();
            (c.compatible && c.product == expect, format!("{:?}", c.product))
        }),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    checks.push(check(
        "G5",
        "initial minors equal their labels",
        (|| {
            let minors = initial_minors(spec)?;
            let labels: Vec<MinorSpec> = f.labels.iter().map(|l| l.parse()).collect::<Result<_>>()?;
            let idx_ok = minors.iter().map(|m| m.0).collect::<Vec<_>>() == f.j_set;
            let mut ok = idx_ok;
            for _ in 0..20 {
                let x = sample_unitri(6, &mut rng);
                ok &= minors.iter().zip(&labels).all(|((_, m), l)| minor(&x, m) == minor(&x, l));
            }
            Ok((ok, "20 points".to_string()))
        })(),
    ));

    checks.extend(mutation_class(&f, spec, &seeded.seed, &mut rng));
    checks
}

fn mutation_class(f: &Fixture, spec: &CategorySpec, seed: &Seed, rng: &mut ChaCha8Rng) -> Vec<Check> {
    let class = match enumerate_class(seed, DEFAULT_CAP) {
        Ok(c) => c,
        Err(e) => return vec![Check::error("G6", "enumeration", &e)],
    };
    let mut checks = vec![Check::new(
        "G6",
        "seeds and variables",
        class.status == ClassStatus::Complete && class.seeds.len() == f.seeds && class.variables.len() == 9,
        format!("{} seeds, {} mutable variables", class.seeds.len(), class.variables.len()),
    )];
    checks.push(check(
        "G6",
        "variables match the Plücker list",
        (|| {
            let points = chart_points(spec, seed, 20, rng)?;
            let targets = mutable_targets(f);
            let names = seed.variable_names();
            let mut matched = vec![false; targets.len()];
            let mut unmatched = Vec::new();
            for var in &class.variables {
                let values: Vec<Q> = points.iter().map(|(_, v)| var.eval(v)).collect::<Result<_>>()?;
                let hit = targets
                    .iter()
                    .position(|(_, t)| points.iter().zip(&values).all(|((x, _), val)| &t(x) == val));
                match hit {
                    Some(i) if !matched[i] => matched[i] = true,
                    _ => unmatched.push(var.format(&names)),
                }
            }
            let frozen_ok = points.iter().all(|(x, vals)| {
                let mut got: Vec<Q> =
                    (0..seed.len()).filter(|&p| seed.quiver.frozen[p]).map(|p| vals[p].clone()).collect();
                let mut want: Vec<Q> = f.frozen_plucker.iter().map(|c| plucker(x, c)).collect();
                got.sort();
                want.sort();
                got == want
            });
            let ok = unmatched.is_empty() && matched.iter().all(|&m| m) && frozen_ok;
            let detail = if ok {
                "20 chart points".to_string()
            } else {
                format!("unmatched {unmatched:?}, frozen ok {frozen_ok}")
            };
            Ok((ok, detail))
        })(),
    ));
    checks
}

fn upper4(p: &[Q]) -> Matrix {
    let mut x = Matrix::identity(4);
    for ((r, c), val) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)].into_iter().zip(p) {
        x[(r, c)] = val.clone();
    }
    x
}

pub fn torus_a3(rng_seed: u64) -> Vec<Check> {
    let g = Weyl::new(DynkinDiagram::a(3));
    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed ^ 71);
    checks.push(check(
        "G7",
        "ζ entries and O membership",
        (|| {
            let v = g.parse_word("s2")?;
            let w = g.parse_word("s1 s2 s3")?;
            let (mut inside, mut outside, mut ok) = (0, 0, true);
            let mut trial = 0;
            while inside < 25 {
                trial += 1;
                let mut p: Vec<Q> = (0..6).map(|_| random_q(&mut rng)).collect();
                // force the boundary now and then
                if trial % 4 == 0 {
                    p[if trial % 8 == 0 { 2 } else { 5 }] = Q::zero();
                }
                let (a, b, c, d, e, f) = (&p[0], &p[1], &p[2], &p[3], &p[4], &p[5]);
                let x = upper4(&p);
                let expect_in = !c.is_zero() && !f.is_zero();
                ok &= in_o(&g, &v, &w, &x)? == expect_in;
                if !expect_in {
                    outside += 1;
                    continue;
                }
                inside += 1;
                let want = upper4(&[
                    -Q::one() / c,
                    -a / c,
                    -b / c,
                    a.clone(),
                    (b * f - c) / f,
                    (d * f - e) / f,
                ]);
                ok &= zeta(&g, &v, &w, &x)? == want;
            }
            Ok((ok, format!("{inside} instances inside, {outside} outside")))
        })(),
    ));
    checks.push(check(
        "G7",
        "torus stratum seed",
        (|| {
            let s = run_seed(&JobSpec::new("A3", "s2", "s1 s2 s3", None))?;
            let frozen = s.seed.quiver.frozen.iter().filter(|&&x| x).count();
            let class = enumerate_class(&s.seed, DEFAULT_CAP)?;
            let ok = s.seed.len() == 2 && frozen == 2 && class.variables.is_empty();
            Ok((ok, format!("{frozen} frozen, {} mutable", class.variables.len())))
        })(),
    ));
    checks
}

pub fn remark() -> Vec<Check> {
    vec![check(
        "G8",
        "projective-injectives for v = s2, w = s1 s3 s2 s1 s3",
        (|| {
            let spec = CategorySpec::parse(&DynkinDiagram::a(3), "s2", "s1 s3 s2 s1 s3", None)?;
            let alg = spec.algebra();
            let mut pieces = Vec::new();
            for m in spec.projective_injectives() {
                if !m.is_zero() {
                    pieces.extend(indecomposable_pieces(&m)?);
                }
            }
            let mut expected: Vec<(&str, LambdaModule)> = vec![
                ("Q1", alg.injective(0).clone()),
                ("Q3", alg.injective(2).clone()),
                ("S1", alg.simple(0)),
                ("S3", alg.simple(2)),
            ];
            let mut found = Vec::new();
            let mut extra = 0;
            for p in &pieces {
                match expected.iter().position(|(_, e)| is_isomorphic(p, e)) {
                    Some(i) => found.push(expected.remove(i).0),
                    None => extra += 1,
                }
            }
            // the initial tilting module must carry exactly these as frozen summands
            let t = initial_tilting(&spec)?;
            let frozen = t.summands.iter().filter(|s| s.frozen).count();
            let ok = expected.is_empty() && extra == 0 && frozen == 4;
            Ok((ok, format!("found {found:?}, {extra} unexpected, {frozen} frozen summands")))
        })(),
    )]
}
