//! Frozen traces on the running example and the duplication example.

mod common;

use common::*;
use lamrun_core::harness::{trace, RunOptions};
use lamrun_core::ham::{Ham, Mode};
use lamrun_core::kam::Kam;
use lamrun_core::liam::Iam;
use lamrun_core::ljam::Jam;
use lamrun_core::lpam::Pam;
use lamrun_core::machine::Machine;

fn assert_rows(actual: Option<Vec<String>>, expected: &[&str]) {
    let actual = actual.expect("run finishes");
    for (i, (a, e)) in actual.iter().zip(expected).enumerate() {
        assert_eq!(a, e, "row {i}");
    }
    assert_eq!(actual.len(), expected.len());
}

#[test]
fn iam_three() {
    let c = code(THREE);
    assert_rows(rows(&Iam::new(&c)), IAM_THREE);
}

#[test]
fn jam_three() {
    let c = code(THREE);
    assert_rows(rows(&Jam::new(&c)), JAM_THREE);
}

#[test]
fn kam_three() {
    let c = code(THREE);
    assert_rows(rows(&Kam::new(&c)), KAM_THREE);
}

#[test]
fn pam_three() {
    let c = code(THREE);
    assert_rows(rows(&Pam::new(&c)), PAM_THREE);
}

#[test]
fn iam_delta() {
    let c = code(DELTA);
    assert_rows(rows(&Iam::new(&c)), IAM_DELTA);
}

#[test]
fn jam_delta() {
    let c = code(DELTA);
    assert_rows(rows(&Jam::new(&c)), JAM_DELTA);
}

#[test]
fn kam_delta() {
    let c = code(DELTA);
    assert_rows(rows(&Kam::new(&c)), KAM_DELTA);
}

#[test]
fn pam_delta() {
    let c = code(DELTA);
    assert_rows(rows(&Pam::new(&c)), PAM_DELTA);
}
fn labels<M: Machine>(m: &M) -> Vec<String> {
    let (_, events) = trace(m, &RunOptions::checked(10_000));
    events
        .into_iter()
        .map(|e| if e.label.starts_with("var") { "var".to_string() } else { e.label })
        .collect()
}

#[test]
fn ham_modes_follow_jam_and_kam_labels() {
    for src in [THREE, DELTA] {
        let c = code(src);
        assert_eq!(labels(&Ham::new(&c, Mode::J)), labels(&Jam::new(&c)), "{src}");
        assert_eq!(labels(&Ham::new(&c, Mode::K)), labels(&Kam::new(&c)), "{src}");
    }
}
