//! Runs part of the `check` suite in-process and prints its report.
//!
//! cargo run --release --example cli_check

fn main() {
    let args = [
        "nategory",
        "check",
        "--instance",
        "powerset",
        "--instance",
        "weak",
        "--instance",
        "berg-intfloor",
        "--max-path-len",
        "2",
    ];
    let code = nategory::cli::run(args, &mut std::io::stdout(), &mut std::io::stderr());
    println!("exit code {code}");
}
