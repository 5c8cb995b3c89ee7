//! Builds `examples/demo.c` against the generated header and the static
//! library, then runs it. Skipped when no C compiler is on the PATH.

use std::path::{Path, PathBuf};
use std::process::Command;

fn compiler() -> Option<String> {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    Command::new(&cc).arg("--version").output().ok()?;
    Some(cc)
}

fn static_lib() -> Option<PathBuf> {
    // the test binary lives in target/<profile>/deps
    let deps = std::env::current_exe().ok()?.parent()?.to_path_buf();
    let lib = deps.parent()?.join("libcatalan_ffi.a");
    lib.exists().then_some(lib)
}

#[test]
fn c_program_links_and_runs() {
    let Some(cc) = compiler() else {
        eprintln!("no C compiler; skipping");
        return;
    };
    let Some(lib) = static_lib() else {
        eprintln!("static library not built; skipping");
        return;
    };
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let exe = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("catalan_demo");
    let status = Command::new(cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(root.join("include"))
        .arg(root.join("examples/demo.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&exe)
        .status()
        .expect("compiler runs");
    assert!(status.success(), "compilation failed");
    let output = Command::new(&exe).output().expect("demo runs");
    assert!(
        output.status.success(),
        "{}",
        String::from_utf8_lossy(&output.stderr)
    );
    assert_eq!(
        String::from_utf8(output.stdout).unwrap(),
        "1-8,2-7,3-4,5-6\n3814986502092304\n"
    );
}
