//! Data-parallel helpers. With the default `parallel` feature the maps run
//! on rayon and preserve input order; without it they degrade to plain
//! sequential iteration. `map_seq` is always sequential and serves as the
//! baseline in the bench suite.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

pub fn map_seq<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// Run `body` under a thread pool of the given width (0 = library default).
/// Without the `parallel` feature the width is ignored.
pub fn with_threads<R, F>(threads: usize, body: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    #[cfg(feature = "parallel")]
    {
        if threads == 0 {
            body()
        } else {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .expect("thread pool")
                .install(body)
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        body()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order() {
        let xs: Vec<u32> = (0..100).collect();
        let doubled = map(&xs, |x| x * 2);
        assert_eq!(doubled, map_seq(&xs, |x| x * 2));
        assert_eq!(doubled[7], 14);
    }

    #[test]
    fn with_threads_runs_body() {
        let r = with_threads(1, || 42);
        assert_eq!(r, 42);
    }
}
