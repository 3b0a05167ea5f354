//! Thread-pool configuration for the parallel sweeps.

/// Environment variable consulted for the worker count.
pub const THREADS_ENV: &str = "LEVELCOMPLEX_THREADS";

/// Reads the worker count from [`THREADS_ENV`], if set and positive.
pub fn thread_count_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
}

/// Installs the global thread pool with `threads` workers (or the
/// environment override, or rayon's default). Safe to call repeatedly;
/// only the first configuration takes effect.
pub fn configure_threads(threads: Option<usize>) {
    let chosen = threads.or_else(thread_count_from_env);
    if let Some(n) = chosen {
        // A second initialization attempt returns an error we can ignore:
        // the pool is already serving.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn env_parsing() {
        // Only checks the parse logic; the variable is unset in tests.
        std::env::remove_var(THREADS_ENV);
        assert_eq!(thread_count_from_env(), None);
    }
}
