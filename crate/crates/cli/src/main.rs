use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = subpoly_cli::run(std::env::args_os());
    if code != 0 {
        if let Some(msg) = out.get("error").and_then(|e| e.as_str()) {
            eprintln!("subpoly: {msg}");
        }
    }
    match out.get("help").and_then(|h| h.as_str()) {
        Some(help) => print!("{help}"),
        None => println!("{}", serde_json::to_string(&out).expect("JSON value")),
    }
    ExitCode::from(code as u8)
}
