//! Persists computed `Psi_d` to a JSON cache and seeds a fresh table from it.

use chebpsi::cache::PsiCache;
use chebpsi::PsiTable;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::temp_dir().join(format!("psi-cache-{}.json", std::process::id()));

    let table = PsiTable::new();
    for d in 1..=60 {
        table.psi(d)?;
    }
    let mut cache = PsiCache::default();
    cache.absorb(&table);
    cache.save(&path)?;
    println!(
        "wrote {} entries to {}",
        cache.entries.len(),
        path.display()
    );

    // loading validates degree, leading coefficient and roots of every entry
    let loaded = PsiCache::load(&path)?;
    let fresh = PsiTable::new();
    loaded.seed(&fresh)?;
    assert_eq!(fresh.psi(60)?, table.psi(60)?);
    println!("reloaded {} entries", loaded.entries.len());

    std::fs::write(&path, r#"{"version":1,"entries":{"12":["-3","0","5"]}}"#)?;
    match PsiCache::load(&path) {
        Ok(_) => println!("tampered cache accepted?"),
        Err(e) => println!("tampered cache rejected: {e}"),
    }
    std::fs::remove_file(&path)?;
    Ok(())
}
