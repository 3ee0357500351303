//! Compiles and runs a small C program against the generated header and the
//! static library, exercising the ABI the way a foreign binding would.

use std::path::PathBuf;
use std::process::Command;

const C_PROGRAM: &str = r#"
#include <assert.h>
#include <stdio.h>
#include <string.h>
#include "superext.h"

int main(void) {
    assert(sx_abi_version() == 1);

    uint64_t count = 0;
    assert(sx_count_lambda(5, 1, &count) == SxOk);
    assert(count == 81);
    assert(sx_count_lambda(9, 1, &count) == SxTooLarge);

    SxGroup *g = NULL;
    assert(sx_group_cyclic(5, &g) == SxOk);
    assert(sx_group_order(g) == 5);

    SxLambda *l = NULL;
    assert(sx_lambda_build(g, &l) == SxOk);
    assert(sx_lambda_size(l) == 81);
    assert(sx_lambda_idempotent_count(l) == 5);
    assert(sx_lambda_orbit_count(l) == 17);

    uint32_t zero = 0;
    assert(sx_lambda_zero(l, &zero) == SxOk);
    char label[16];
    assert(sx_lambda_element_label(l, zero, label, sizeof label) == SxOk);
    assert(strcmp(label, "Z") == 0);

    uint32_t ideal = 0;
    assert(sx_lambda_maximal_ideal_size(l, &ideal) == SxOk);
    assert(ideal == 76);

    uint64_t aut_order = 0;
    char aut_name[16];
    assert(sx_lambda_aut(l, &aut_order, aut_name, sizeof aut_name) == SxOk);
    printf("size=%u zero=%s aut=%llu name=%s\n",
           sx_lambda_size(l), label,
           (unsigned long long)aut_order, aut_name);

    sx_lambda_free(l);
    sx_group_free(g);
    return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let include_dir = manifest.join("include");
    let lib_dir = manifest.join("../../target/debug");
    let staticlib = lib_dir.join("libsuperext_capi.a");
    if !staticlib.exists() {
        // `cargo test` alone may not emit the staticlib artifact.
        let cargo = std::env::var("CARGO").unwrap_or_else(|_| "cargo".to_string());
        let built = Command::new(cargo)
            .args(["build", "-p", "superext-capi"])
            .current_dir(&manifest)
            .status()
            .map(|s| s.success())
            .unwrap_or(false);
        if !built || !staticlib.exists() {
            eprintln!("skipping: {} not built", staticlib.display());
            return;
        }
    }
    let cc = match Command::new("cc").arg("--version").output() {
        Ok(out) if out.status.success() => "cc",
        _ => {
            eprintln!("skipping: no C compiler available");
            return;
        }
    };

    let work = std::env::temp_dir().join(format!("superext-c-smoke-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&work);
    std::fs::create_dir_all(&work).unwrap();
    let src = work.join("smoke.c");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let exe = work.join("smoke");

    let compile = Command::new(cc)
        .arg(&src)
        .arg("-I")
        .arg(&include_dir)
        .arg(&staticlib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&exe)
        .output()
        .expect("compiler runs");
    assert!(
        compile.status.success(),
        "compile failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&exe).output().expect("smoke binary runs");
    assert!(
        run.status.success(),
        "smoke run failed:\n{}",
        String::from_utf8_lossy(&run.stderr)
    );
    let stdout = String::from_utf8_lossy(&run.stdout);
    assert!(stdout.contains("size=81 zero=Z aut=4 name=C4"), "{stdout}");
}
