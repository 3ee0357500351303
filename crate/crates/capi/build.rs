fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").expect("manifest dir");
    let header = std::path::Path::new(&crate_dir).join("include/superext.h");
    std::fs::create_dir_all(header.parent().unwrap()).expect("create include dir");
    cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_language(cbindgen::Language::C)
        .with_include_guard("SUPEREXT_H")
        .with_cpp_compat(true)
        .generate()
        .expect("cbindgen generates the header")
        .write_to_file(header);
    println!("cargo:rerun-if-changed=src/lib.rs");
}
