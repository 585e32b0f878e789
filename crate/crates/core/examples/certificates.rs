//! The command-line front end called in-process: each run prints a JSON
//! certificate and returns an exit code.
//!
//! cargo run --example certificates

fn run(args: &[&str]) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = ladderkit::cli::run_with(std::iter::once("ladderkit").chain(args.iter().copied()), &mut out, &mut err);
    println!("$ ladderkit {} -> exit {code}", args.join(" "));
    print!("{}", String::from_utf8_lossy(&out));
}

fn main() {
    let dir = std::env::temp_dir().join("ladderkit-example");
    std::fs::create_dir_all(&dir).unwrap();
    let c5 = dir.join("c5.g6");
    std::fs::write(&c5, "Dhc\n").unwrap();
    let c5 = c5.to_str().unwrap();
    run(&["--pretty", "td2", c5]);
    run(&["ladder", "--find", "3", c5]);
    run(&["gen", "kelly", "3", "--format", "json"]);
}
