mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command) {
        Ok(out) => {
            if cli.json {
                let mut v = out.json;
                if let Some(obj) = v.as_object_mut() {
                    obj.insert("schema".into(), json!("1"));
                }
                println!("{}", serde_json::to_string_pretty(&v).expect("values serialize"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            if cli.json {
                let v = json!({"schema": "1", "error": {"kind": e.kind(), "message": e.message()}});
                println!("{}", serde_json::to_string_pretty(&v).expect("values serialize"));
            }
            ExitCode::from(e.exit_code())
        }
    }
}
