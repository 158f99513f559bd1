//! Canonical text labels for subsets, shared by hyperspaces, face posets
//! and subdivisions so that corresponding constructions literally agree.

use alloc::string::String;
use alloc::vec::Vec;

/// `{a,b,c}` with members in sorted order. Input need not be sorted.
pub fn subset_label<S: AsRef<str>>(members: &[S]) -> String {
    let mut sorted: Vec<&str> = members.iter().map(|m| m.as_ref()).collect();
    sorted.sort_unstable();
    sorted.dedup();
    let mut out = String::from("{");
    for (k, m) in sorted.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str(m);
    }
    out.push('}');
    out
}

/// Label for a subset of naturals, sorted numerically.
pub fn nat_subset_label(members: &[u32]) -> String {
    let mut sorted: Vec<u32> = members.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut out = String::from("{");
    for (k, m) in sorted.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str(itoa(*m).as_str());
    }
    out.push('}');
    out
}

fn itoa(v: u32) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    let _ = write!(s, "{v}");
    s
}
