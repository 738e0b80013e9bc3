//! The `strata` binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use strata_core::cluster::{enumerate_class, SeedDocument, DEFAULT_CAP};
use strata_core::job::{initial_values, run_seed};
use strata_core::minors::{plucker, sample_chart_point};
use strata_core::verify::a5_codim_one_job;

const V: &str = "s1 s2 s1 s4 s5 s4";
const W: &str = "s1 s3 s5 s2 s4 s1 s3 s5 s2 s4 s1 s3 s5 s4";

fn strata(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_strata"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(s) = stdin {
        child.stdin.take().unwrap().write_all(s.as_bytes()).unwrap();
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn a5_seed() -> String {
    let o = strata(&["seed", "-t", "A5", "-v", V, "-w", W, "-i", W], None);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn seed_counts() {
    let doc = SeedDocument::from_json(&a5_seed()).unwrap();
    assert_eq!(doc.vertices.len(), 8);
    assert_eq!(doc.vertices.iter().filter(|v| v.frozen).count(), 5);

    let o = strata(&["seed", "-t", "A3", "-v", "s2", "-w", "s1 s2 s3"], None);
    let doc = SeedDocument::from_json(&stdout(&o)).unwrap();
    assert_eq!((doc.vertices.len(), doc.vertices.iter().filter(|v| v.frozen).count()), (2, 2));

    let o = strata(&["seed", "-t", "A2", "-v", "", "-w", "s1"], None);
    let doc = SeedDocument::from_json(&stdout(&o)).unwrap();
    assert_eq!(doc.vertices.len(), 1);
    assert!(doc.vertices[0].frozen && doc.vertices[0].label.is_some());
}

#[test]
fn seed_dot() {
    let o = strata(&["seed", "-t", "A5", "-v", V, "-w", W, "-i", W, "--format", "dot"], None);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches(" -> ").count(), 13);
}

#[test]
fn d_type_seed_warns() {
    let o = strata(&["seed", "-t", "D4", "-v", "", "-w", "s1 s2"], None);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("type A"));
    let doc = SeedDocument::from_json(&stdout(&o)).unwrap();
    assert!(doc.vertices.iter().all(|v| v.label.is_none()));
    assert!(!doc.warnings.is_empty());
}

#[test]
fn v_not_below_w_is_an_error() {
    let o = strata(&["seed", "-t", "A3", "-v", "s1 s2", "-w", "s1"], None);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Bruhat"));
}

#[test]
fn mutate_echoes() {
    let seed = a5_seed();
    let o = strata(&["mutate", "-"], Some(&seed));
    assert_eq!(stdout(&o), seed);
    let o = strata(&["mutate", "-", "7", "7"], Some(&seed));
    assert_eq!(stdout(&o), seed);
    let o = strata(&["mutate", "-", "10"], Some(&seed));
    assert_eq!(o.status.code(), Some(2));
}

/// Replays a path to every seed of the class through the binary and checks
/// that `[145][236] - [456]` shows up.
#[test]
fn mutation_driver_reaches_the_non_plucker_variable() {
    let s = run_seed(&a5_codim_one_job()).unwrap();
    let class = enumerate_class(&s.seed, DEFAULT_CAP).unwrap();
    let mut parent = vec![None; class.seeds.len()];
    parent[0] = Some((0, 0));
    for &(from, pos, to) in &class.edges {
        if parent[to].is_none() {
            parent[to] = Some((from, pos));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (x, init) = loop {
        let x = sample_chart_point(&mut rng).unwrap();
        let init = initial_values(&s.spec, &s.seed, &x).unwrap();
        if init.iter().all(|v| !v.is_zero()) {
            break (x, init);
        }
    };
    let x_tilde = plucker(&x, &[1, 4, 5]) * plucker(&x, &[2, 3, 6]) - plucker(&x, &[4, 5, 6]);

    let seed = a5_seed();
    let mut reached = false;
    for (t, target) in class.seeds.iter().enumerate() {
        let mut path = Vec::new();
        let mut cur = t;
        while cur != 0 {
            let (from, pos) = parent[cur].unwrap();
            path.push(class.seeds[from].ids()[pos].to_string());
            cur = from;
        }
        path.reverse();
        let mut args = vec!["mutate", "-"];
        args.extend(path.iter().map(String::as_str));
        let out = SeedDocument::from_json(&stdout(&strata(&args, Some(&seed)))).unwrap();
        assert_eq!(out.variables, target.variable_strings());
        reached |= out.to_seed().unwrap().evaluate(&init).unwrap().contains(&x_tilde);
    }
    assert!(reached);
}

#[test]
fn categorical_mutation_agrees() {
    let seed = a5_seed();
    let o = strata(&["mutate", "-", "3", "7", "8", "--categorical", "-t", "A5", "-v", V, "-w", W, "-i", W], Some(&seed));
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(String::from_utf8_lossy(&o.stderr).matches("quiver agrees").count(), 3);
    let plain = strata(&["mutate", "-", "3", "7", "8"], Some(&seed));
    assert_eq!(stdout(&o), stdout(&plain));
}

#[test]
fn verify_suites() {
    let o = strata(&["verify", "sect71"], None);
    assert!(o.status.success());
    assert!(stdout(&o).contains("PASS G7"));
    let o = strata(&["verify", "nonsense"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn minors_listing() {
    let o = strata(&["minors", "-t", "A5", "-v", V, "-w", W, "-i", W], None);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 8);
    assert_eq!(text.lines().filter(|l| l.contains("frozen")).count(), 5);
}
