//! Stateless JSON service: every request carries the full seed.
//!
//! Request bodies are parsed by hand so that malformed JSON is a 400 with the
//! same error body as every other rejected input.

use axum::body::Bytes;
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use strata_core::cluster::SeedDocument;
use strata_core::job::JobSpec;
use strata_core::Error;

use crate::commands::{error_kind, mutate, seed_document};

#[derive(Debug, Deserialize)]
pub struct MutateRequest {
    pub seed: SeedDocument,
    pub vertex: usize,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ErrorBody {
    pub error: String,
    pub kind: String,
}

pub fn router() -> Router {
    Router::new()
        .route("/api/health", get(health))
        .route("/api/seed", post(seed))
        .route("/api/mutate", post(mutate_handler))
}

async fn health() -> Json<serde_json::Value> {
    Json(serde_json::json!({ "status": "ok" }))
}

fn error_response(e: &Error) -> Response {
    let status = match e {
        Error::NotBruhatBelow => StatusCode::UNPROCESSABLE_ENTITY,
        Error::Invariant(_) | Error::InexactDivision(_) | Error::DecompositionStalled => {
            StatusCode::INTERNAL_SERVER_ERROR
        }
        _ => StatusCode::BAD_REQUEST,
    };
    let body = ErrorBody { error: e.to_string(), kind: error_kind(e).into() };
    (status, Json(body)).into_response()
}

fn document_response(r: Result<SeedDocument, Error>) -> Response {
    match r {
        Ok(doc) => ([(header::CONTENT_TYPE, "application/json")], doc.to_json()).into_response(),
        Err(e) => error_response(&e),
    }
}

fn parse<T: for<'de> Deserialize<'de>>(body: &[u8]) -> Result<T, Error> {
    serde_json::from_slice(body).map_err(|e| Error::Parse(e.to_string()))
}

/// Runs a pure computation off the async workers.
async fn compute<F>(f: F) -> Response
where
    F: FnOnce() -> Result<SeedDocument, Error> + Send + 'static,
{
    match tokio::task::spawn_blocking(f).await {
        Ok(r) => document_response(r),
        Err(e) => error_response(&Error::Invariant(format!("worker failed: {e}"))),
    }
}

async fn seed(body: Bytes) -> Response {
    match parse::<JobSpec>(&body) {
        Ok(job) => compute(move || seed_document(&job)).await,
        Err(e) => error_response(&e),
    }
}

async fn mutate_handler(body: Bytes) -> Response {
    match parse::<MutateRequest>(&body) {
        Ok(req) => compute(move || mutate(&req.seed, &[req.vertex])).await,
        Err(e) => error_response(&e),
    }
}

/// Serves until interrupted.
pub async fn serve(host: &str, port: u16) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind((host, port)).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router())
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
