//! C ABI over `edcds`.
//!
//! Graphs and node sets cross the boundary as opaque handles that the caller
//! releases with the matching `*_free` function. Every fallible call returns
//! an [`EdcStatus`]; on failure a description is available from
//! [`edc_last_error_message`] on the same thread. Panics are caught and
//! reported as [`EdcStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use edcds::baselines::{das_cds, greedy_ds, wu_li_cds};
use edcds::cds;
use edcds::edc::DsAlgorithm;
use edcds::graph::{generate_udg, is_cds_per_component, is_dominating_set, GraphFile};
use edcds::oracle::{min_cds_exact, min_ds_exact};
use edcds::{Error, Graph, NodeId};

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidGraph = 3,
    ParseError = 4,
    TooLarge = 5,
    Panic = 6,
}

/// Values accepted by [`edc_ds`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdcDsAlgorithm {
    Basic = 0,
    Improved = 1,
    Greedy = 2,
}

/// Values accepted by [`edc_cds`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdcCdsAlgorithm {
    /// EDC connection stage over the improved dominating set.
    Edc = 0,
    /// EDC connection stage over the basic dominating set.
    EdcFromBasic = 1,
    WuLi = 2,
    Greedy = 3,
}

/// Opaque graph handle.
pub struct EdcGraph(Graph);

/// Opaque sorted list of node ids.
pub struct EdcNodeSet(Vec<NodeId>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    // interior NULs cannot appear in a C string
    let message = CString::new(message.replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(message));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(EdcStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::NodeOutOfRange(..)
            | Error::SelfLoop(_)
            | Error::UnknownNode(..)
            | Error::NotAnEdge(..) => EdcStatus::InvalidGraph,
            Error::Format(_) | Error::Json(_) | Error::Io(_) => EdcStatus::ParseError,
            Error::TooLarge { .. } => EdcStatus::TooLarge,
            _ => EdcStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(EdcStatus::NullPointer, format!("{what} is null"))
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> EdcStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => EdcStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(format!("internal panic: {message}"));
            EdcStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(graph: *const EdcGraph) -> Result<&'a Graph, Failure> {
    graph.as_ref().map(|g| &g.0).ok_or_else(|| null("graph"))
}

unsafe fn slice<'a, T>(data: *const T, len: usize, what: &str) -> Result<&'a [T], Failure> {
    if len == 0 {
        Ok(&[])
    } else if data.is_null() {
        Err(null(what))
    } else {
        Ok(std::slice::from_raw_parts(data, len))
    }
}

unsafe fn store<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

/// Message for the last failed call on this thread, or NULL after a
/// successful one. Valid until the next call into this library.
#[no_mangle]
pub extern "C" fn edc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}

/// Builds a graph on `n` nodes from `edge_count` pairs stored flat in `edges`
/// (`u0, v0, u1, v1, ...`). Duplicates collapse; self-loops and ids `>= n`
/// fail with `EDC_STATUS_INVALID_GRAPH`.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable `uint32_t` values (it may
/// be NULL when `edge_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn edc_graph_new(
    n: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut EdcGraph,
) -> EdcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let len = edge_count
            .checked_mul(2)
            .ok_or_else(|| Failure(EdcStatus::InvalidArgument, "edge_count overflows".into()))?;
        let flat = slice(edges, len, "edges")?;
        let g = Graph::new(n, flat.chunks_exact(2).map(|p| (p[0], p[1])))?;
        store(out, EdcGraph(g));
        Ok(())
    })
}

/// Samples a unit-disk graph with `n` nodes in a square of side `area_side`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn edc_graph_generate_udg(
    n: usize,
    radius: f64,
    area_side: f64,
    seed: u64,
    out: *mut *mut EdcGraph,
) -> EdcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let geo = generate_udg(n, radius, area_side, seed)?;
        store(out, EdcGraph(geo.into_graph()));
        Ok(())
    })
}

/// Parses a NUL-terminated graph JSON document.
///
/// # Safety
/// `json` must be a valid C string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn edc_graph_from_json(json: *const c_char, out: *mut *mut EdcGraph) -> EdcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if json.is_null() {
            return Err(null("json"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|e| Failure(EdcStatus::ParseError, format!("json is not UTF-8: {e}")))?;
        let g = GraphFile::from_json(text)?.to_graph()?;
        store(out, EdcGraph(g));
        Ok(())
    })
}

/// Releases a graph. NULL is ignored.
///
/// # Safety
/// `graph` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn edc_graph_free(graph: *mut EdcGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Node count, 0 for NULL.
///
/// # Safety
/// `graph` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn edc_graph_node_count(graph: *const EdcGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.node_count())
}

/// Edge count, 0 for NULL.
///
/// # Safety
/// `graph` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn edc_graph_edge_count(graph: *const EdcGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Computes a dominating set. `algorithm` is an `EdcDsAlgorithm` value.
///
/// # Safety
/// `graph` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn edc_ds(
    graph: *const EdcGraph,
    algorithm: u32,
    out: *mut *mut EdcNodeSet,
) -> EdcStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let set = match algorithm {
            0 => DsAlgorithm::Basic.run(g).dominators,
            1 => DsAlgorithm::Improved.run(g).dominators,
            2 => greedy_ds(g),
            other => {
                return Err(Failure(
                    EdcStatus::InvalidArgument,
                    format!("unknown DS algorithm {other}"),
                ))
            }
        };
        store(out, EdcNodeSet(set));
        Ok(())
    })
}

/// Computes a connected dominating set of every component. `algorithm` is an
/// `EdcCdsAlgorithm` value.
///
/// # Safety
/// `graph` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn edc_cds(
    graph: *const EdcGraph,
    algorithm: u32,
    out: *mut *mut EdcNodeSet,
) -> EdcStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let set = match algorithm {
            0 | 1 => {
                let ds = if algorithm == 0 {
                    DsAlgorithm::Improved
                } else {
                    DsAlgorithm::Basic
                };
                cds::edc_cds(g, &ds.run(g).dominators)?.cds
            }
            2 => wu_li_cds(g),
            3 => das_cds(g),
            other => {
                return Err(Failure(
                    EdcStatus::InvalidArgument,
                    format!("unknown CDS algorithm {other}"),
                ))
            }
        };
        store(out, EdcNodeSet(set));
        Ok(())
    })
}

/// Exact minimum dominating set (or, if `connected` is true, minimum
/// connected dominating set). Graphs above the exact-search limit fail with
/// `EDC_STATUS_TOO_LARGE`.
///
/// # Safety
/// `graph` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn edc_min_exact(
    graph: *const EdcGraph,
    connected: bool,
    out: *mut *mut EdcNodeSet,
) -> EdcStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let result = if connected {
            min_cds_exact(g)?
        } else {
            min_ds_exact(g)?
        };
        store(out, EdcNodeSet(result.opt_set));
        Ok(())
    })
}

/// Writes whether `nodes` dominates the graph (per component and connected
/// within each component when `connected` is true).
///
/// # Safety
/// `nodes` must point to `len` readable ids (NULL allowed when `len` is 0),
/// `graph` must be a live handle and `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn edc_check_set(
    graph: *const EdcGraph,
    nodes: *const u32,
    len: usize,
    connected: bool,
    result: *mut bool,
) -> EdcStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        if result.is_null() {
            return Err(null("result"));
        }
        let s = slice(nodes, len, "nodes")?;
        *result = if connected {
            is_cds_per_component(g, s)
        } else {
            is_dominating_set(g, s)
        };
        Ok(())
    })
}

/// Number of ids in the set, 0 for NULL.
///
/// # Safety
/// `set` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn edc_node_set_len(set: *const EdcNodeSet) -> usize {
    set.as_ref().map_or(0, |s| s.0.len())
}

/// Sorted ids, valid while the set is alive. NULL for an empty or NULL set.
///
/// # Safety
/// `set` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn edc_node_set_data(set: *const EdcNodeSet) -> *const u32 {
    match set.as_ref() {
        Some(s) if !s.0.is_empty() => s.0.as_ptr(),
        _ => ptr::null(),
    }
}

/// Releases a node set. NULL is ignored.
///
/// # Safety
/// `set` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn edc_node_set_free(set: *mut EdcNodeSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}
