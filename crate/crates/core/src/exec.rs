//! Data-parallel helpers. With the `parallel` feature these dispatch to
//! rayon; otherwise they are plain sequential loops. Results are always
//! collected in index order so callers can reduce deterministically.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Below this many items the sequential path is used even when the
/// `parallel` feature is enabled.
#[cfg(feature = "parallel")]
pub(crate) const PAR_THRESHOLD: usize = 256;

/// Evaluates `f` on `0..len`, returning results in index order.
pub(crate) fn map_range<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if len >= PAR_THRESHOLD {
            return (0..len).into_par_iter().map(f).collect();
        }
    }
    (0..len).map(f).collect()
}

/// Applies `f(index, chunk)` to consecutive `chunk_len`-sized chunks.
pub(crate) fn for_each_chunk_mut<T, F>(data: &mut [T], chunk_len: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if data.len() / chunk_len.max(1) >= PAR_THRESHOLD {
            data.par_chunks_mut(chunk_len)
                .enumerate()
                .for_each(|(i, c)| f(i, c));
            return;
        }
    }
    data.chunks_mut(chunk_len)
        .enumerate()
        .for_each(|(i, c)| f(i, c));
}
