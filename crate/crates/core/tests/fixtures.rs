mod common;

use common::{algebra_path, load, module_paths, ALGEBRAS};
use superhaar::io::{
    parse_algebra_json, parse_module_json, to_canonical_json, AlgebraFile, ModuleFile,
};
use superhaar::validate_module;

#[test]
fn algebra_files_are_canonical() {
    for name in ALGEBRAS {
        let text = std::fs::read_to_string(algebra_path(name)).unwrap();
        let alg = parse_algebra_json(&text).unwrap().to_algebra().unwrap();
        assert_eq!(alg.name(), name);
        assert_eq!(
            to_canonical_json(&AlgebraFile::from_algebra(&alg)),
            text,
            "{name}"
        );
    }
}

#[test]
fn module_files_are_canonical_and_valid() {
    for name in ALGEBRAS {
        let alg = load(name);
        let paths = module_paths(name);
        assert!(!paths.is_empty(), "{name} has no modules");
        for path in paths {
            let text = std::fs::read_to_string(&path).unwrap();
            let module = parse_module_json(&text).unwrap().to_module(&alg).unwrap();
            assert_eq!(
                to_canonical_json(&ModuleFile::from_module(&alg, &module)),
                text,
                "{}",
                path.display()
            );
            assert!(
                validate_module(&alg, &module).unwrap().is_valid(),
                "{}",
                path.display()
            );
        }
    }
}

#[test]
fn fixture_algebras_satisfy_jacobi() {
    for name in ALGEBRAS {
        assert!(load(name).validate().is_valid(), "{name}");
    }
}
