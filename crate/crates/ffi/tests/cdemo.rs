//! Compiles and runs examples/demo.c against the generated header and the
//! static library, proving the header and the ABI line up for a real C
//! consumer. Skips quietly when no C compiler is on PATH.

use std::path::PathBuf;
use std::process::Command;

fn profile_dir() -> PathBuf {
    // target/<profile>/deps/cdemo-<hash> -> target/<profile>
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_demo_compiles_and_runs() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".to_string());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler ({cc}) on PATH");
        return;
    }

    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let profile = profile_dir();
    let staticlib = profile.join("liblexmat_ffi.a");
    assert!(
        staticlib.exists(),
        "static library missing at {}",
        staticlib.display()
    );
    let demo = profile.join("lexmat-cdemo");

    let compile = Command::new(&cc)
        .arg(manifest.join("examples/demo.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg("-Wall")
        .arg("-Wextra")
        .arg("-Werror")
        .arg("-o")
        .arg(&demo)
        .arg(&staticlib)
        .args(["-lpthread", "-ldl", "-lm"])
        .output()
        .expect("compiler runs");
    assert!(
        compile.status.success(),
        "compile failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&demo).output().expect("demo runs");
    assert!(
        run.status.success(),
        "demo failed:\n{}",
        String::from_utf8_lossy(&run.stderr)
    );
    let expected = format!(
        "lexmat {}\n\
         parsed 3x3 nonincreasing=1\n\
         110\n101\n011\n\
         gamma(5,3) = 3\n\
         delta(4,2) members = 2\n\
         composition 2,3 block matrix:\n\
         11000\n11000\n00110\n00101\n00011\n\
         recovered parts: 2 3\n\
         f_90 = 4660046610375530309\n",
        env!("CARGO_PKG_VERSION")
    );
    assert_eq!(String::from_utf8(run.stdout).unwrap(), expected);
}
