//! Diagnostics on stderr. Colour only when stderr is a terminal and
//! `NO_COLOR` is unset.

use std::io::IsTerminal;

fn colour_enabled() -> bool {
    std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && std::io::stderr().is_terminal()
}

fn emit(label: &str, ansi: &str, message: &str) {
    if colour_enabled() {
        eprintln!("\x1b[{ansi}m{label}:\x1b[0m {message}");
    } else {
        eprintln!("{label}: {message}");
    }
}

pub fn warn(message: impl AsRef<str>) {
    emit("warning", "1;33", message.as_ref());
}

pub fn error(message: impl AsRef<str>) {
    emit("error", "1;31", message.as_ref());
}
