//! Fetching graphs from the House of Graphs database by id, with a local
//! byte cache so repeat lookups never touch the network.

use super::{parse_graph6, GraphDocument};
use crate::error::{Error, Result};
use std::path::{Path, PathBuf};

/// Why a transport could not produce a body.
#[derive(Debug)]
pub enum FetchFailure {
    /// the service answered that the resource does not exist
    NotFound,
    /// anything else: connection refused, timeout, bad status, ...
    Failed(String),
}

/// The one network operation the fetch client needs. Tests substitute
/// canned responses; production uses [`HttpTransport`].
pub trait Transport {
    fn get(&self, url: &str) -> std::result::Result<Vec<u8>, FetchFailure>;
}

/// Talks plain HTTP(S) to the database's public interface.
#[derive(Debug, Default)]
pub struct HttpTransport;

impl Transport for HttpTransport {
    fn get(&self, url: &str) -> std::result::Result<Vec<u8>, FetchFailure> {
        let mut response = ureq::get(url).call().map_err(|e| match e {
            ureq::Error::StatusCode(404) => FetchFailure::NotFound,
            other => FetchFailure::Failed(other.to_string()),
        })?;
        response
            .body_mut()
            .read_to_vec()
            .map_err(|e| FetchFailure::Failed(e.to_string()))
    }
}

/// Default service root; override with the `HOG_BASE_URL` environment
/// variable (useful for mirrors and for tests against a local server).
const DEFAULT_BASE_URL: &str = "https://houseofgraphs.org";

fn base_url() -> String {
    std::env::var("HOG_BASE_URL").unwrap_or_else(|_| DEFAULT_BASE_URL.to_string())
}

/// Where graph `id` lives (or would live) under `cache_dir`.
pub fn hog_cache_path(cache_dir: &Path, id: u64) -> PathBuf {
    cache_dir.join(format!("hog-{id}.g6"))
}

/// Fetch graph `id`, preferring the cache at `cache_dir/hog-<id>.g6`. On a
/// network fetch the payload is validated, then cached atomically.
/// `offline` forbids network use entirely: a cold cache is then an error.
pub fn hog_fetch(
    id: u64,
    cache_dir: &Path,
    offline: bool,
    transport: &dyn Transport,
) -> Result<GraphDocument> {
    let path = hog_cache_path(cache_dir, id);
    let payload = match std::fs::read(&path) {
        Ok(bytes) => bytes,
        Err(_) if offline => return Err(Error::NotCached(id)),
        Err(_) => {
            let url = format!("{}/api/graphs/{id}/graph6", base_url());
            let bytes = transport.get(&url).map_err(|failure| match failure {
                FetchFailure::NotFound => Error::UnknownHogId(id),
                FetchFailure::Failed(message) => Error::HttpFailure { id, message },
            })?;
            // only well-formed payloads enter the cache
            let text = String::from_utf8(bytes.clone()).map_err(|_| Error::HttpFailure {
                id,
                message: "response is not UTF-8 text".to_string(),
            })?;
            parse_graph6(&text)?;
            write_atomically(&path, &bytes)?;
            bytes
        }
    };
    let text = String::from_utf8(payload).map_err(|_| Error::HttpFailure {
        id,
        message: "cached payload is not UTF-8 text".to_string(),
    })?;
    let graph = parse_graph6(&text)?;
    let mut doc = GraphDocument::new(graph);
    doc.metadata.name = Some(format!("hog-{id}"));
    doc.metadata.source = Some("House of Graphs".to_string());
    doc.metadata.hog_id = Some(id);
    Ok(doc)
}

fn write_atomically(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    std::fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(
        ".{}.tmp-{}",
        path.file_name().and_then(|s| s.to_str()).unwrap_or("hog"),
        std::process::id()
    ));
    std::fs::write(&tmp, bytes)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::io::write_graph6;
    use std::cell::{Cell, RefCell};

    struct StubTransport {
        calls: Cell<usize>,
        last_url: RefCell<String>,
        response: std::result::Result<Vec<u8>, &'static str>,
    }

    impl StubTransport {
        fn serving(bytes: Vec<u8>) -> Self {
            StubTransport {
                calls: Cell::new(0),
                last_url: RefCell::new(String::new()),
                response: Ok(bytes),
            }
        }

        fn not_found() -> Self {
            StubTransport {
                calls: Cell::new(0),
                last_url: RefCell::new(String::new()),
                response: Err("not found"),
            }
        }

        fn unreachable_host() -> Self {
            StubTransport {
                calls: Cell::new(0),
                last_url: RefCell::new(String::new()),
                response: Err("connection refused"),
            }
        }
    }

    impl Transport for StubTransport {
        fn get(&self, url: &str) -> std::result::Result<Vec<u8>, FetchFailure> {
            self.calls.set(self.calls.get() + 1);
            *self.last_url.borrow_mut() = url.to_string();
            match &self.response {
                Ok(bytes) => Ok(bytes.clone()),
                Err("not found") => Err(FetchFailure::NotFound),
                Err(message) => Err(FetchFailure::Failed(message.to_string())),
            }
        }
    }

    fn payload() -> Vec<u8> {
        let g = generators::cycle(5).unwrap();
        write_graph6(&g).into_bytes()
    }

    #[test]
    fn second_fetch_is_served_from_the_cache() {
        let dir = tempfile::tempdir().unwrap();
        let stub = StubTransport::serving(payload());

        let first = hog_fetch(77, dir.path(), false, &stub).unwrap();
        assert_eq!(first.graph.node_count(), 5);
        assert_eq!(stub.calls.get(), 1);
        assert!(stub.last_url.borrow().ends_with("/api/graphs/77/graph6"));
        assert!(dir.path().join("hog-77.g6").exists());

        let second = hog_fetch(77, dir.path(), false, &stub).unwrap();
        assert_eq!(stub.calls.get(), 1, "cache hit must not touch the network");
        assert_eq!(second.graph.edges(), first.graph.edges());
        assert_eq!(second.metadata.hog_id, Some(77));
    }

    #[test]
    fn offline_with_a_warm_cache_succeeds() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("hog-12.g6"), payload()).unwrap();
        let stub = StubTransport::unreachable_host();
        let doc = hog_fetch(12, dir.path(), true, &stub).unwrap();
        assert_eq!(doc.graph.node_count(), 5);
        assert_eq!(stub.calls.get(), 0);
    }

    #[test]
    fn offline_with_a_cold_cache_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let stub = StubTransport::unreachable_host();
        assert!(matches!(
            hog_fetch(99, dir.path(), true, &stub),
            Err(Error::NotCached(99))
        ));
        assert_eq!(stub.calls.get(), 0);
    }

    #[test]
    fn missing_ids_and_dead_hosts_are_distinct_errors() {
        let dir = tempfile::tempdir().unwrap();
        assert!(matches!(
            hog_fetch(5, dir.path(), false, &StubTransport::not_found()),
            Err(Error::UnknownHogId(5))
        ));
        assert!(matches!(
            hog_fetch(5, dir.path(), false, &StubTransport::unreachable_host()),
            Err(Error::HttpFailure { id: 5, .. })
        ));
    }

    #[test]
    fn garbage_payloads_are_not_cached() {
        let dir = tempfile::tempdir().unwrap();
        let stub = StubTransport::serving(b"this is not graph6 \x01".to_vec());
        assert!(hog_fetch(31, dir.path(), false, &stub).is_err());
        assert!(
            !dir.path().join("hog-31.g6").exists(),
            "invalid payloads must not poison the cache"
        );
    }
}
