use charnum_core::manifold::{builtin, builtin_manifest, reference_model, BUILTIN_NAMES};

#[test]
fn bundled_manifests_match_constructions() {
    for name in BUILTIN_NAMES {
        let built = reference_model(name).unwrap().to_json();
        let bundled = builtin_manifest(name).unwrap();
        assert_eq!(bundled.trim_end(), built, "manifest {name} is stale");
        assert_eq!(builtin(name).unwrap().numbers(), reference_model(name).unwrap().numbers());
    }
}

/// Rewrites the bundled manifests: `cargo test --test manifests -- --ignored`.
#[test]
#[ignore]
fn regenerate_bundled_manifests() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("manifests");
    for name in BUILTIN_NAMES {
        let json = reference_model(name).unwrap().to_json();
        std::fs::write(dir.join(format!("{name}.json")), json + "\n").unwrap();
    }
}
