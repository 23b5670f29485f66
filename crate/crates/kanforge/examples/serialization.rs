//! JSON interchange: canonical output and round trips.

use kanforge::corpus;
use kanforge::io::{parse_document, roundtrip};
use kanforge::Result;

pub fn run_example() -> Result<()> {
    for id in ["group_s3", "indiscrete2", "twogroup_oneobj_z2", "tau2_nerve_z2", "segal_circle"] {
        let doc = corpus::get(id)?;
        let text = doc.to_canonical()?;
        let stable = roundtrip(&text)?.as_deref() == Some(text.as_str());
        println!("{id}: a {}, {} bytes, round trip stable: {stable}", doc.kind(), text.len());
    }
    let text = corpus::get("circle")?.to_canonical()?;
    let back = parse_document(&text)?;
    println!("circle parsed back as a {}", back.kind());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
