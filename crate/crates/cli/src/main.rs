use clap::Parser;

fn main() {
    // die quietly when stdout is a closed pipe instead of panicking
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = ringkt_cli::Cli::parse();
    std::process::exit(ringkt_cli::run(cli));
}
