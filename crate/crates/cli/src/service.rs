//! Stateless JSON API. Routing and status codes live in [`dispatch`], a pure
//! function of the request; the axum layer only moves bytes.

use std::net::SocketAddr;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::State;
use axum::http::{Method, StatusCode, Uri};
use axum::response::{IntoResponse, Response as AxumResponse};
use axum::Router;
use curvlab::io::report::{
    AnalysisDocument, BridgePredictionDocument, ErrorDocument, GraphDocument, LeafPredictionDocument,
    ReportDocument,
};
use curvlab::rational::to_exact;
use curvlab::{analyze, families, predict_bridge_join, predict_leaf_join, steinerberger_curvature, Error, Graph};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

pub const DEFAULT_MAX_N: usize = 64;

#[derive(Debug, Clone, Copy)]
pub struct ServiceConfig {
    pub max_n: usize,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        ServiceConfig { max_n: DEFAULT_MAX_N }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Response {
    pub status: u16,
    pub body: Value,
}

impl Response {
    fn ok(body: Value) -> Self {
        Response { status: 200, body }
    }

    fn error(status: u16, error: &str, message: String) -> Self {
        Response { status, body: json!({ "error": error, "message": message }) }
    }

    fn from_error(e: &Error) -> Self {
        let status = if e.is_malformed_input() { 400 } else { 422 };
        Response { status, body: serde_json::to_value(ErrorDocument::from(e)).expect("serializable") }
    }
}

type Handled = Result<Value, Response>;

fn core<T>(r: curvlab::Result<T>) -> Result<T, Response> {
    r.map_err(|e| Response::from_error(&e))
}

fn parse_body<T: DeserializeOwned>(body: &[u8]) -> Result<T, Response> {
    serde_json::from_slice(body).map_err(|e| Response::error(400, "MalformedRequest", e.to_string()))
}

fn graph_of(cfg: &ServiceConfig, doc: &GraphDocument) -> Result<Graph, Response> {
    if doc.n > cfg.max_n {
        return Err(Response::error(
            413,
            "GraphTooLarge",
            format!("n = {} exceeds the service limit of {}", doc.n, cfg.max_n),
        ));
    }
    core(doc.to_graph())
}

#[derive(Deserialize)]
struct AnalyzeRequest {
    #[serde(flatten)]
    graph: GraphDocument,
    /// Echoed back so clients can discard stale responses.
    #[serde(default)]
    seq: Option<u64>,
}

#[derive(Deserialize)]
struct LeafRequest {
    graph: GraphDocument,
    u: usize,
}

#[derive(Deserialize)]
struct BridgeRequest {
    g1: GraphDocument,
    u: usize,
    g2: GraphDocument,
    v: usize,
}

fn curvature(cfg: &ServiceConfig, body: &[u8]) -> Handled {
    let g = graph_of(cfg, &parse_body(body)?)?;
    let report = core(analyze(&g))?;
    Ok(serde_json::to_value(ReportDocument::new(&g, &report)).expect("serializable"))
}

fn analyze_endpoint(cfg: &ServiceConfig, body: &[u8]) -> Handled {
    let req: AnalyzeRequest = parse_body(body)?;
    let g = graph_of(cfg, &req.graph)?;
    let report = core(analyze(&g))?;
    let mut v = serde_json::to_value(AnalysisDocument::new(&g, &report)).expect("serializable");
    if let Some(seq) = req.seq {
        v["seq"] = json!(seq);
    }
    Ok(v)
}

fn exact_vec(v: &[curvlab::Rational]) -> Vec<String> {
    v.iter().map(to_exact).collect()
}

fn predict_leaf(cfg: &ServiceConfig, body: &[u8]) -> Handled {
    let req: LeafRequest = parse_body(body)?;
    let g = graph_of(cfg, &req.graph)?;
    if g.n() + 1 > cfg.max_n {
        return Err(Response::error(413, "GraphTooLarge", "joined graph exceeds the service limit".into()));
    }
    let p = core(predict_leaf_join(&g, req.u))?;
    let direct = core(steinerberger_curvature(&core(g.attach_leaf(req.u))?))?;
    Ok(json!({
        "prediction": LeafPredictionDocument::from(&p),
        "solver": exact_vec(&direct.curvature),
        "matches_solver": p.predicted == direct.curvature,
    }))
}

fn predict_bridge(cfg: &ServiceConfig, body: &[u8]) -> Handled {
    let req: BridgeRequest = parse_body(body)?;
    let g1 = graph_of(cfg, &req.g1)?;
    let g2 = graph_of(cfg, &req.g2)?;
    if g1.n() + g2.n() > cfg.max_n {
        return Err(Response::error(413, "GraphTooLarge", "joined graph exceeds the service limit".into()));
    }
    let p = core(predict_bridge_join(&g1, req.u, &g2, req.v))?;
    let direct = core(steinerberger_curvature(&core(g1.bridge_join(req.u, &g2, req.v))?))?;
    Ok(json!({
        "prediction": BridgePredictionDocument::from(&p),
        "solver": exact_vec(&direct.curvature),
        "matches_solver": p.predicted == direct.curvature,
    }))
}

fn family(cfg: &ServiceConfig, name: &str, query: Option<&str>) -> Handled {
    let known = families::catalog().iter().any(|f| f.name == name)
        || matches!(name, "K" | "Q" | "J" | "cp" | "CP" | "book" | "book_of_triangles");
    if !known {
        return Err(Response::error(404, "UnknownFamily", format!("no family named {name:?}")));
    }
    let args = parse_args(query)?;
    let g = core(families::build(name, &args))?;
    if g.n() > cfg.max_n {
        return Err(Response::error(413, "GraphTooLarge", format!("{name} has {} vertices", g.n())));
    }
    let mut v = serde_json::to_value(GraphDocument::from_graph(&g)).expect("serializable");
    v["name"] = json!(name);
    v["args"] = json!(args);
    Ok(v)
}

/// `args=4,2` (a percent-encoded comma is accepted too).
fn parse_args(query: Option<&str>) -> Result<Vec<usize>, Response> {
    let bad = |m: String| Response::error(400, "MalformedRequest", m);
    let mut args = Vec::new();
    for pair in query.unwrap_or("").split('&').filter(|p| !p.is_empty()) {
        let (key, value) = pair.split_once('=').unwrap_or((pair, ""));
        if key != "args" {
            return Err(bad(format!("unknown query parameter {key:?}")));
        }
        let value = value.replace("%2C", ",").replace("%2c", ",");
        for piece in value.split(',').filter(|s| !s.is_empty()) {
            args.push(piece.trim().parse().map_err(|_| bad(format!("bad argument {piece:?}")))?);
        }
    }
    Ok(args)
}

const POST_ROUTES: [&str; 4] = ["/api/curvature", "/api/analyze", "/api/predict/leaf", "/api/predict/bridge"];

/// Routes one request. Identical inputs give identical outputs.
pub fn dispatch(cfg: &ServiceConfig, method: &str, path: &str, query: Option<&str>, body: &[u8]) -> Response {
    let result = match (method, path) {
        ("POST", "/api/curvature") => curvature(cfg, body),
        ("POST", "/api/analyze") => analyze_endpoint(cfg, body),
        ("POST", "/api/predict/leaf") => predict_leaf(cfg, body),
        ("POST", "/api/predict/bridge") => predict_bridge(cfg, body),
        ("GET", "/api/families") => Ok(serde_json::to_value(families::catalog()).expect("serializable")),
        ("GET", p) if p.starts_with("/api/families/") => family(cfg, &p["/api/families/".len()..], query),
        (_, p) if POST_ROUTES.contains(&p) || p == "/api/families" || p.starts_with("/api/families/") => {
            Err(Response::error(405, "MethodNotAllowed", format!("{method} not allowed on {path}")))
        }
        _ => Err(Response::error(404, "NotFound", format!("no route for {path}"))),
    };
    match result {
        Ok(v) => Response::ok(v),
        Err(r) => r,
    }
}

async fn handle(State(cfg): State<Arc<ServiceConfig>>, method: Method, uri: Uri, body: Bytes) -> AxumResponse {
    let (method, path, query) = (method.to_string(), uri.path().to_string(), uri.query().map(str::to_string));
    let response = tokio::task::spawn_blocking(move || dispatch(&cfg, &method, &path, query.as_deref(), &body))
        .await
        .unwrap_or_else(|e| Response::error(500, "InternalError", e.to_string()));
    let status = StatusCode::from_u16(response.status).unwrap_or(StatusCode::INTERNAL_SERVER_ERROR);
    (status, axum::Json(response.body)).into_response()
}

pub fn router(cfg: ServiceConfig) -> Router {
    Router::new().fallback(handle).with_state(Arc::new(cfg))
}

pub async fn serve(addr: SocketAddr, cfg: ServiceConfig) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(cfg)).await
}
