use std::path::Path;
use std::process::Command;

fn header() -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/hassett_kit.h");
    std::fs::read_to_string(path).expect("header is generated by the build script")
}

#[test]
fn header_declares_the_api() {
    let h = header();
    for name in [
        "typedef struct HkWeightData HkWeightData;",
        "typedef struct HkPolynomial HkPolynomial;",
        "HK_STATUS_OK = 0",
        "HK_STATUS_REJECTED = 4",
        "HK_MODE_SUM_TWO",
        "hk_weight_data_parse(",
        "hk_kapranov_weights(",
        "hk_poly_parse(",
        "hk_tyurina_number(",
        "hk_quotient_dimension(",
        "hk_segre_ledger_json(",
        "hk_last_error_message(",
        "hk_string_free(",
    ] {
        assert!(h.contains(name), "header lacks {name}");
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler found, skipping");
        return;
    };
    let dir = std::env::temp_dir().join(format!("hk-header-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("use_header.c");
    std::fs::write(
        &src,
        r#"#include "hassett_kit.h"
int check(void) {
    HkWeightData *w = 0;
    HkStatus s = hk_kapranov_weights(6, 1, 1, &w);
    uint64_t order = 0;
    bool finite = false;
    if (s == HK_STATUS_OK) s = hk_aut_order(w, &order, &finite);
    hk_weight_data_free(w);
    return (int)s;
}
"#,
    )
    .unwrap();
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(&include)
        .arg(&src)
        .status()
        .unwrap();
    assert!(status.success());
}

fn which_cc() -> Result<&'static str, ()> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok())
        .ok_or(())
}
