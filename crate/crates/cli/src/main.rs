use std::io;
use std::process::ExitCode;

use aristotle_cli::{run, Context};

fn main() -> ExitCode {
    let plain = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
    let mut stdin = io::stdin().lock();
    let mut ctx = Context {
        stdin: &mut stdin,
        plain,
    };
    let code = run(
        std::env::args_os(),
        &mut ctx,
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
