use std::fs;
use std::process::Command;

use lie_psi::cache::CharCache;
use lie_psi::charlib::Group;
use lie_psi::Error;

fn only_file(dir: &std::path::Path) -> std::path::PathBuf {
    let mut files: Vec<_> = fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 1, "{files:?}");
    files.pop().unwrap()
}

fn warm(dir: &std::path::Path) -> std::path::PathBuf {
    let cache = CharCache::new(dir).unwrap();
    let g = Group::parse("G2").unwrap().with_cache(Some(cache));
    g.dominant_character(&[1, 1]).unwrap();
    only_file(dir)
}

fn reload(dir: &std::path::Path) -> lie_psi::Result<()> {
    let g = Group::parse("G2").unwrap().with_cache(Some(CharCache::new(dir).unwrap()));
    g.dominant_character(&[1, 1]).map(|_| ())
}

#[test]
fn warm_entry_reproduces_the_computation() {
    let dir = tempfile::tempdir().unwrap();
    warm(dir.path());
    let cached = Group::parse("G2").unwrap().with_cache(Some(CharCache::new(dir.path()).unwrap()));
    let fresh = Group::parse("G2").unwrap().with_cache(None);
    assert_eq!(cached.dominant_character(&[1, 1]).unwrap(), fresh.dominant_character(&[1, 1]).unwrap());
}

#[test]
fn edited_multiplicity_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = warm(dir.path());
    let text = fs::read_to_string(&path).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    lines[2] = format!("{}7", lines[2]);
    fs::write(&path, lines.join("\n") + "\n").unwrap();
    let e = reload(dir.path()).unwrap_err();
    assert!(matches!(&e, Error::CacheCorrupt { reason, .. } if reason == "checksum mismatch"), "{e}");
}

#[test]
fn truncated_file_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = warm(dir.path());
    let text = fs::read_to_string(&path).unwrap();
    fs::write(&path, &text[..text.len() / 2]).unwrap();
    assert!(matches!(reload(dir.path()), Err(Error::CacheCorrupt { .. })));
}

#[test]
fn entry_under_the_wrong_name_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = warm(dir.path());
    let g = Group::parse("G2").unwrap().with_cache(Some(CharCache::new(dir.path()).unwrap()));
    let target = path.with_file_name(path.file_name().unwrap().to_str().unwrap().replace("1_1", "2_0"));
    fs::rename(&path, &target).unwrap();
    let e = g.dominant_character(&[2, 0]).unwrap_err();
    assert!(matches!(&e, Error::CacheCorrupt { reason, .. } if reason.contains("key")), "{e}");
}

#[test]
fn cli_reports_corruption_with_exit_code_two() {
    let dir = tempfile::tempdir().unwrap();
    let cache = CharCache::new(dir.path()).unwrap();
    let g = Group::parse("G2").unwrap().with_cache(Some(cache));
    for i in 0..2 {
        g.dominant_character(&g.rs.fundamental_weight(i)).unwrap();
    }
    for entry in fs::read_dir(dir.path()).unwrap() {
        let path = entry.unwrap().path();
        let text = fs::read_to_string(&path).unwrap();
        fs::write(&path, text.replacen("checksum ", "checksum 0", 1)).unwrap();
    }
    let out = Command::new(env!("CARGO_BIN_EXE_lie-psi"))
        .args(["--cache-dir", dir.path().to_str().unwrap(), "type", "G2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("checksum mismatch"));
}
