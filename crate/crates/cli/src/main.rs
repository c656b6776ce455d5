use std::process::ExitCode;

fn main() -> ExitCode {
    let result = distlab_cli::run(std::env::args_os());
    if result.exit_code == 2 {
        eprint!("{}", result.payload);
    } else {
        print!("{}", result.payload);
    }
    ExitCode::from(result.exit_code)
}
