use std::io::Write;

fn main() {
    let (stdout, stderr) = (std::io::stdout(), std::io::stderr());
    let (mut out, mut err) = (stdout.lock(), stderr.lock());
    let code = gysin::cli::run(std::env::args().skip(1), &mut out, &mut err);
    let _ = out.flush();
    std::process::exit(code);
}
