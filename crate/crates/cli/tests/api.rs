//! The HTTP service, driven in-process.

use axum::body::Body;
use axum::http::{Request, StatusCode};
use http_body_util::BodyExt;
use strata_cli::commands::seed_document;
use strata_cli::server::{router, ErrorBody};
use strata_core::cluster::SeedDocument;
use strata_core::verify::a5_codim_one_job;
use tower::ServiceExt;

async fn call(method: &str, uri: &str, body: String) -> (StatusCode, String) {
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(Body::from(body))
        .unwrap();
    let resp = router().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    (status, String::from_utf8(bytes.to_vec()).unwrap())
}

fn a5_job_json() -> String {
    serde_json::to_string(&a5_codim_one_job()).unwrap()
}

#[tokio::test]
async fn health() {
    let (status, body) = call("GET", "/api/health", String::new()).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(serde_json::from_str::<serde_json::Value>(&body).unwrap(), serde_json::json!({"status": "ok"}));
}

#[tokio::test]
async fn a5_seed_has_five_frozen_vertices() {
    let (status, body) = call("POST", "/api/seed", a5_job_json()).await;
    assert_eq!(status, StatusCode::OK, "{body}");
    assert_eq!(body.matches("\"frozen\": true").count(), 5);
    let doc = SeedDocument::from_json(&body).unwrap();
    assert_eq!(doc.vertices.len(), 8);
    let raw: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(raw["info"]["cluster_type"], "A3");
    assert_eq!(raw["info"]["mutable_count"], 3);
}

#[tokio::test]
async fn service_matches_the_command_line() {
    let (_, body) = call("POST", "/api/seed", a5_job_json()).await;
    assert_eq!(body, seed_document(&a5_codim_one_job()).unwrap().to_json());
}

#[tokio::test]
async fn mutating_twice_returns_the_same_document() {
    let (_, seed) = call("POST", "/api/seed", a5_job_json()).await;
    let doc: serde_json::Value = serde_json::from_str(&seed).unwrap();
    for vertex in [3, 7, 8] {
        let once = serde_json::json!({"seed": doc, "vertex": vertex}).to_string();
        let (status, first) = call("POST", "/api/mutate", once).await;
        assert_eq!(status, StatusCode::OK, "{first}");
        assert_ne!(first, seed);
        let first: serde_json::Value = serde_json::from_str(&first).unwrap();
        let twice = serde_json::json!({"seed": first, "vertex": vertex}).to_string();
        let (status, back) = call("POST", "/api/mutate", twice).await;
        assert_eq!(status, StatusCode::OK);
        assert_eq!(back, seed);
    }
}

#[tokio::test]
async fn job_field_aliases() {
    let body = r#"{"type": "A3", "v": "s2", "w": "s1 s2 s3", "i": "s1 s2 s3"}"#;
    let (status, doc) = call("POST", "/api/seed", body.into()).await;
    assert_eq!(status, StatusCode::OK, "{doc}");
    assert_eq!(doc.matches("\"frozen\": true").count(), 2);
}

#[tokio::test]
async fn rejected_inputs() {
    let (status, body) = call("POST", "/api/seed", r#"{"type": "A3", "v": "s1 s2", "w": "s1"}"#.into()).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(serde_json::from_str::<ErrorBody>(&body).unwrap().kind, "not_bruhat_below");

    let (status, body) = call("POST", "/api/seed", "{not json".into()).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(serde_json::from_str::<ErrorBody>(&body).unwrap().kind, "parse");

    let (status, _) = call("POST", "/api/seed", r#"{"type": "B3", "w": "s1"}"#.into()).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);

    let (status, _) = call("POST", "/api/seed", r#"{"type": "A3", "w": "s1 s1"}"#.into()).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);

    let (_, seed) = call("POST", "/api/seed", a5_job_json()).await;
    let doc: serde_json::Value = serde_json::from_str(&seed).unwrap();
    let req = serde_json::json!({"seed": doc, "vertex": 10}).to_string();
    let (status, body) = call("POST", "/api/mutate", req).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(serde_json::from_str::<ErrorBody>(&body).unwrap().kind, "frozen_vertex");

    let req = serde_json::json!({"seed": doc, "vertex": 99}).to_string();
    let (status, _) = call("POST", "/api/mutate", req).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
}

/// The published schema lists every key the service writes.
#[tokio::test]
async fn documents_follow_the_published_schema() {
    let schema: serde_json::Value =
        serde_json::from_str(include_str!("../../../docs/seed.schema.json")).unwrap();
    let (_, body) = call("POST", "/api/seed", a5_job_json()).await;
    let doc: serde_json::Value = serde_json::from_str(&body).unwrap();
    let props = schema["properties"].as_object().unwrap();
    for key in schema["required"].as_array().unwrap() {
        assert!(doc.get(key.as_str().unwrap()).is_some(), "missing {key}");
    }
    for key in doc.as_object().unwrap().keys() {
        assert!(props.contains_key(key), "{key} is not in the schema");
    }
    let vertex_props = props["vertices"]["items"]["properties"].as_object().unwrap();
    for key in doc["vertices"][0].as_object().unwrap().keys() {
        assert!(vertex_props.contains_key(key));
    }
}
