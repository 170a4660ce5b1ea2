//! What the fan reader rejects.
//!
//!     cargo run --example fan_validation

use toric_additive::fan::FanData;

fn main() {
    let samples = [
        ("P^2", r#"{"dim":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,1],[1,2],[0,2]]}"#),
        ("non-primitive ray", r#"{"dim":2,"rays":[[2,0],[0,1]],"max_cones":[[0,1]]}"#),
        ("half plane", r#"{"dim":2,"rays":[[1,0],[-1,0],[0,1]],"max_cones":[[0,1,2]]}"#),
        ("overlap", r#"{"dim":2,"rays":[[1,0],[1,1],[0,1]],"max_cones":[[0,2],[1,2]]}"#),
        ("face listed", r#"{"dim":2,"rays":[[1,0],[0,1]],"max_cones":[[0,1],[0]]}"#),
    ];
    for (name, json) in samples {
        let data = FanData::from_json(json).unwrap();
        let v = data.validate();
        if v.is_empty() {
            println!("{name}: valid");
        } else {
            let msgs: Vec<String> = v.iter().map(ToString::to_string).collect();
            println!("{name}: {}", msgs.join("; "));
        }
    }
}
