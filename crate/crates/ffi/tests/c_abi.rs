use std::ffi::{CStr, CString};
use std::ptr;

use edcds_ffi::*;

fn graph(n: usize, edges: &[u32]) -> *mut EdcGraph {
    let mut g = ptr::null_mut();
    let status = unsafe { edc_graph_new(n, edges.as_ptr(), edges.len() / 2, &mut g) };
    assert_eq!(status, EdcStatus::Ok);
    g
}

fn take(set: *mut EdcNodeSet) -> Vec<u32> {
    unsafe {
        let len = edc_node_set_len(set);
        let data = edc_node_set_data(set);
        let v = if len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(data, len).to_vec()
        };
        edc_node_set_free(set);
        v
    }
}

fn last_error() -> String {
    let p = edc_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn path_ds_and_cds() {
    let g = graph(5, &[0, 1, 1, 2, 2, 3, 3, 4]);
    unsafe {
        assert_eq!(edc_graph_node_count(g), 5);
        assert_eq!(edc_graph_edge_count(g), 4);

        let mut set = ptr::null_mut();
        assert_eq!(
            edc_ds(g, EdcDsAlgorithm::Improved as u32, &mut set),
            EdcStatus::Ok
        );
        assert!(edc_last_error_message().is_null());
        assert_eq!(take(set), vec![1, 3]);

        assert_eq!(edc_cds(g, EdcCdsAlgorithm::Edc as u32, &mut set), EdcStatus::Ok);
        let cds = take(set);
        assert_eq!(cds, vec![1, 2, 3]);

        let mut ok = false;
        assert_eq!(
            edc_check_set(g, cds.as_ptr(), cds.len(), true, &mut ok),
            EdcStatus::Ok
        );
        assert!(ok);
        assert_eq!(
            edc_check_set(g, [1u32, 3].as_ptr(), 2, true, &mut ok),
            EdcStatus::Ok
        );
        assert!(!ok);
        assert_eq!(
            edc_check_set(g, [1u32, 3].as_ptr(), 2, false, &mut ok),
            EdcStatus::Ok
        );
        assert!(ok);

        assert_eq!(edc_min_exact(g, false, &mut set), EdcStatus::Ok);
        assert_eq!(take(set), vec![0, 3]);
        edc_graph_free(g);
    }
}

#[test]
fn every_algorithm_is_valid() {
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(edc_graph_generate_udg(60, 25.0, 100.0, 7, &mut g), EdcStatus::Ok);
        for algo in [
            EdcDsAlgorithm::Basic,
            EdcDsAlgorithm::Improved,
            EdcDsAlgorithm::Greedy,
        ] {
            let mut set = ptr::null_mut();
            assert_eq!(edc_ds(g, algo as u32, &mut set), EdcStatus::Ok);
            let s = take(set);
            let mut ok = false;
            edc_check_set(g, s.as_ptr(), s.len(), false, &mut ok);
            assert!(ok, "{algo:?}");
        }
        for algo in [
            EdcCdsAlgorithm::Edc,
            EdcCdsAlgorithm::EdcFromBasic,
            EdcCdsAlgorithm::WuLi,
            EdcCdsAlgorithm::Greedy,
        ] {
            let mut set = ptr::null_mut();
            assert_eq!(edc_cds(g, algo as u32, &mut set), EdcStatus::Ok);
            let s = take(set);
            let mut ok = false;
            edc_check_set(g, s.as_ptr(), s.len(), true, &mut ok);
            assert!(ok, "{algo:?}");
        }
        edc_graph_free(g);
    }
}

#[test]
fn error_codes() {
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(
            edc_graph_new(3, [1u32, 1].as_ptr(), 1, &mut g),
            EdcStatus::InvalidGraph
        );
        assert!(last_error().contains("self-loop"));
        assert!(g.is_null());
        assert_eq!(
            edc_graph_new(3, [0u32, 3].as_ptr(), 1, &mut g),
            EdcStatus::InvalidGraph
        );
        assert_eq!(edc_graph_new(3, ptr::null(), 1, &mut g), EdcStatus::NullPointer);
        assert_eq!(
            edc_graph_new(3, ptr::null(), 0, ptr::null_mut()),
            EdcStatus::NullPointer
        );
        assert_eq!(
            edc_graph_generate_udg(3, -1.0, 100.0, 0, &mut g),
            EdcStatus::InvalidArgument
        );

        let bad = CString::new("{\"n\": 2, \"edges\": [[0,").unwrap();
        assert_eq!(edc_graph_from_json(bad.as_ptr(), &mut g), EdcStatus::ParseError);
        assert_eq!(edc_graph_from_json(ptr::null(), &mut g), EdcStatus::NullPointer);

        let mut set = ptr::null_mut();
        assert_eq!(edc_ds(ptr::null(), 0, &mut set), EdcStatus::NullPointer);
        assert!(last_error().contains("graph"));

        let g = graph(2, &[0, 1]);
        assert_eq!(edc_ds(g, 9, &mut set), EdcStatus::InvalidArgument);
        assert_eq!(edc_cds(g, 9, &mut set), EdcStatus::InvalidArgument);
        assert_eq!(edc_ds(g, 0, ptr::null_mut()), EdcStatus::NullPointer);
        let mut ok = true;
        assert_eq!(
            edc_check_set(g, [5u32].as_ptr(), 1, false, &mut ok),
            EdcStatus::Ok
        );
        assert!(!ok);
        edc_graph_free(g);

        let mut big = ptr::null_mut();
        assert_eq!(
            edc_graph_generate_udg(30, 25.0, 100.0, 1, &mut big),
            EdcStatus::Ok
        );
        assert_eq!(edc_min_exact(big, false, &mut set), EdcStatus::TooLarge);
        edc_graph_free(big);

        let mut split = ptr::null_mut();
        assert_eq!(edc_graph_new(2, ptr::null(), 0, &mut split), EdcStatus::Ok);
        assert_eq!(edc_min_exact(split, true, &mut set), EdcStatus::InvalidArgument);
        edc_graph_free(split);
    }
}

#[test]
fn json_and_null_handles() {
    let text = CString::new(r#"{"n":3,"edges":[[0,1],[1,2]]}"#).unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(edc_graph_from_json(text.as_ptr(), &mut g), EdcStatus::Ok);
        assert_eq!(edc_graph_edge_count(g), 2);
        edc_graph_free(g);

        assert_eq!(edc_graph_node_count(ptr::null()), 0);
        assert_eq!(edc_node_set_len(ptr::null()), 0);
        assert!(edc_node_set_data(ptr::null()).is_null());
        edc_graph_free(ptr::null_mut());
        edc_node_set_free(ptr::null_mut());
    }
}

#[test]
fn errors_are_per_thread() {
    let mut set = ptr::null_mut();
    assert_eq!(
        unsafe { edc_ds(ptr::null(), 0, &mut set) },
        EdcStatus::NullPointer
    );
    std::thread::spawn(|| assert!(edc_last_error_message().is_null()))
        .join()
        .unwrap();
    assert!(!edc_last_error_message().is_null());
}
