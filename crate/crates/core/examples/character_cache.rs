//! Persisting Freudenthal weight systems on disk; a corrupted entry is reported, not reused.
//! Run: cargo run --release --example character_cache

use lie_psi::cache::CharCache;
use lie_psi::charlib::Group;

fn main() -> lie_psi::Result<()> {
    let dir = std::env::temp_dir().join("lie-psi-example-cache");
    let cache = CharCache::new(&dir)?;
    let e6 = Group::parse("E6")?.with_cache(Some(cache.clone()));
    let ch = e6.dominant_character(&e6.rs.fundamental_weight(3))?;
    println!("E6 w4: {} dominant weights", ch.weights.len());
    let again = Group::parse("E6")?.with_cache(Some(cache));
    println!("reloaded equal: {}", *again.dominant_character(&e6.rs.fundamental_weight(3))? == *ch);
    println!("cache directory: {}", dir.display());
    Ok(())
}
