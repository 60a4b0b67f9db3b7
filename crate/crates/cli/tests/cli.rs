mod common;

use std::fs;

use common::{classical_phi3, modpoly, stdout};
use modpoly_core::arith::Fp;
use modpoly_core::polyfile::PolynomialFile;
use tempfile::tempdir;

#[test]
fn compute_writes_a_verified_symmetric_file() {
    let dir = tempdir().unwrap();
    let o = modpoly(dir.path(), &["compute", "montgomery", "3", "--out", "m3.json"]);
    assert!(o.status.success(), "{o:?}");
    let out = stdout(&o);
    for key in ["height", "degrees X 4 Y 4", "primes", "wall time"] {
        assert!(out.contains(key), "{out}");
    }
    let file = PolynomialFile::read(&dir.path().join("m3.json")).unwrap();
    let cached = fs::read(dir.path().join("cache/montgomery-3.json")).unwrap();
    assert_eq!(cached, fs::read(dir.path().join("m3.json")).unwrap());
    let phi = file.poly().unwrap();
    assert_eq!((phi.deg_x(), phi.deg_y()), (Some(4), Some(4)));
    assert_eq!(phi, phi.transpose());

    let o = modpoly(dir.path(), &["verify", "m3.json", "--checks", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(reports.as_array().unwrap().len(), 8);
}

#[test]
fn flags_and_positionals_are_interchangeable() {
    let dir = tempdir().unwrap();
    let a = modpoly(dir.path(), &["compute", "j", "3", "--out", "a.json", "--no-cache"]);
    let b = modpoly(dir.path(), &["compute", "--invariant", "j", "--ell", "3", "--out", "b.json", "--no-cache"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(fs::read(dir.path().join("a.json")).unwrap(), fs::read(dir.path().join("b.json")).unwrap());
    assert!(!dir.path().join("cache").exists());
}

#[test]
fn unsupported_orders_are_usage_errors() {
    let dir = tempdir().unwrap();
    assert!(modpoly(dir.path(), &["compute", "hessian", "2", "--backend", "interpolation"]).status.success());
    for args in [
        &["compute", "hessian", "2", "--backend", "deformation"][..],
        &["compute", "montgomery", "2"],
        &["compute", "hessian", "3"],
        &["compute", "j", "9"],
        &["compute", "weber", "3"],
        &["compute", "j"],
    ] {
        assert_eq!(modpoly(dir.path(), args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn eval_prints_cusp_powers_and_residues() {
    let dir = tempdir().unwrap();
    for args in [["compute", "montgomery", "3"], ["compute", "j", "3"], ["compute", "hessian", "5"]] {
        assert!(modpoly(dir.path(), &args).status.success());
    }
    let o = modpoly(dir.path(), &["eval", "cache/montgomery-3.json", "--x", "2"]);
    assert_eq!(stdout(&o), "Y^4 - 8*Y^3 + 24*Y^2 - 32*Y + 16\n= (Y - 2)^4\n");

    // Φ₃(0, 54000) mod 1019 from the published table
    let want = classical_phi3().eval(&0.into(), &54000.into());
    let want = Fp::from_bigint(&want, 1019).value();
    let o = modpoly(dir.path(), &["eval", "cache/j-3.json", "--x", "0", "--y", "54000", "--prime", "1019"]);
    assert_eq!(stdout(&o).trim(), want.to_string());

    let o = modpoly(dir.path(), &["eval", "cache/hessian-5.json", "--x", "3w^1"]);
    assert!(stdout(&o).ends_with("= (Y - 3*w^2)^6\n"), "{}", stdout(&o));
    let o = modpoly(dir.path(), &["eval", "cache/hessian-5.json", "--x", "3w^1", "--y", "-3-3*w"]);
    assert_eq!(stdout(&o).trim(), "0");

    for bad in [&["--x", "3v^1"][..], &["--x", "3w^1", "--prime", "1019"], &["--x", "1", "--prime", "1020"]] {
        let mut args = vec!["eval", "cache/hessian-5.json"];
        args.extend_from_slice(bad);
        assert_eq!(modpoly(dir.path(), &args).status.code(), Some(2), "{bad:?}");
    }
}

#[test]
fn verify_reports_corruption_with_a_witness() {
    let dir = tempdir().unwrap();
    assert!(modpoly(dir.path(), &["compute", "montgomery", "5", "--out", "m5.json"]).status.success());
    let mut file = PolynomialFile::read(&dir.path().join("m5.json")).unwrap();
    let c = file.coeffs.iter_mut().find(|c| c.i != c.j).unwrap();
    c.c = format!("{}1", c.c);
    file.write(&dir.path().join("bad.json")).unwrap();
    let o = modpoly(dir.path(), &["verify", "bad.json", "--checks", "symmetry,isogeny-roots"]);
    assert_eq!(o.status.code(), Some(1));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(reports.as_array().unwrap().iter().all(|r| r["pass"] == false && !r["witness"].is_null()));

    fs::write(dir.path().join("junk.json"), "{\"invariant\": \"j\"}").unwrap();
    assert_eq!(modpoly(dir.path(), &["verify", "junk.json"]).status.code(), Some(2));
    assert_eq!(modpoly(dir.path(), &["verify", "m5.json", "--checks", "nope"]).status.code(), Some(2));
}

#[test]
fn known_height_violations_pass_only_with_paper_expectations() {
    let dir = tempdir().unwrap();
    assert!(modpoly(dir.path(), &["compute", "hessian", "5", "--out", "h5.json"]).status.success());
    let strict = modpoly(dir.path(), &["verify", "h5.json", "--checks", "height"]);
    assert_eq!(strict.status.code(), Some(1));
    let lenient = modpoly(dir.path(), &["verify", "h5.json", "--checks", "height", "--paper-expectations"]);
    assert_eq!(lenient.status.code(), Some(0));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&lenient)).unwrap();
    assert_eq!(reports[0]["pass"], false);
    assert_eq!(reports[0]["metrics"]["expected_pass"], false);
}

#[test]
fn environment_overrides_defaults() {
    let dir = tempdir().unwrap();
    let o = std::process::Command::new(env!("CARGO_BIN_EXE_modpoly"))
        .args(["compute", "j", "3", "--out", "j3.json"])
        .current_dir(dir.path())
        .env("MODPOLY_CACHE_DIR", dir.path().join("c"))
        .env("MODPOLY_SEED", "17")
        .env("MODPOLY_BACKEND", "interpolation")
        .output()
        .unwrap();
    assert!(o.status.success());
    let file = PolynomialFile::read(&dir.path().join("j3.json")).unwrap();
    assert_eq!(file.meta.seed, 17);
    assert_eq!(serde_json::to_value(&file.meta.backends).unwrap(), serde_json::json!(["interpolation"]));
    assert_eq!(file.poly().unwrap(), classical_phi3());
    assert!(dir.path().join("c/j-3.json").exists());
}

#[test]
fn cache_list_and_clear() {
    let dir = tempdir().unwrap();
    assert!(modpoly(dir.path(), &["compute", "montgomery", "3"]).status.success());
    let o = modpoly(dir.path(), &["cache", "list"]);
    assert!(stdout(&o).contains("montgomery"), "{}", stdout(&o));
    assert!(modpoly(dir.path(), &["cache", "clear"]).status.success());
    assert!(!dir.path().join("cache").exists());
    assert!(stdout(&modpoly(dir.path(), &["cache", "list"])).contains("empty"));
}
