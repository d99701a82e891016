//! Golden data files: loading, parsing, digests and line diffs.
//!
//! Every fixture is a UTF-8 text file. Lines starting with `#` are
//! comments; everything else is data and is compared exactly.

use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::census::{DimMonomial, ForgetfulProfile};
use crate::center::OrbitVector;
use crate::error::{CertError, Result};

pub const RING: &str = "r.fring";
pub const FIGURE3: &str = "figure3.tsv";
pub const FIGURE2: &str = "figure2.tsv";
pub const ORBIT45: &str = "orbit45.tsv";
pub const CONSTANTS: &str = "constants.tsv";
pub const ALL: [&str; 5] = [RING, FIGURE3, FIGURE2, ORBIT45, CONSTANTS];

/// A directory of fixtures.
#[derive(Clone, Debug)]
pub struct FixtureSet {
    dir: PathBuf,
}

impl FixtureSet {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        FixtureSet { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, name: &str) -> PathBuf {
        self.dir.join(name)
    }

    pub fn read(&self, name: &str) -> Result<String> {
        let path = self.path(name);
        if !path.is_file() {
            return Err(CertError::FixtureMissing { path });
        }
        std::fs::read_to_string(&path).map_err(|source| CertError::Io { path, source })
    }

    /// Hex SHA-256 of the raw file bytes.
    pub fn digest(&self, name: &str) -> Result<String> {
        Ok(sha256_hex(self.read(name)?.as_bytes()))
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Non-comment, non-blank lines with their 1-based line numbers.
pub fn data_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|(i, l)| (i + 1, l.trim_end()))
        .collect()
}

/// A data line where a fixture and the computed value disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureDiff {
    pub fixture: String,
    /// Data-line index (0-based, comments skipped).
    pub index: usize,
    pub expected: String,
    pub computed: String,
}

/// Compare the data lines of a fixture against computed lines.
pub fn diff_data(fixture: &str, text: &str, computed: &[String]) -> Vec<FixtureDiff> {
    let lines = data_lines(text);
    let n = lines.len().max(computed.len());
    (0..n)
        .filter_map(|i| {
            let e = lines.get(i).map(|(_, l)| *l).unwrap_or("");
            let c = computed.get(i).map(String::as_str).unwrap_or("");
            (e != c).then(|| FixtureDiff {
                fixture: fixture.to_string(),
                index: i,
                expected: e.to_string(),
                computed: c.to_string(),
            })
        })
        .collect()
}

fn parse_err(what: &'static str, line: usize, msg: impl Into<String>) -> CertError {
    CertError::Parse { what: what.to_string(), line, msg: msg.into() }
}

fn fields<'a>(what: &'static str, line: usize, l: &'a str, n: usize) -> Result<Vec<&'a str>> {
    let f: Vec<&str> = l.split('\t').collect();
    if f.len() != n {
        return Err(parse_err(what, line, format!("expected {n} fields, found {}", f.len())));
    }
    Ok(f)
}

fn num<T: std::str::FromStr>(what: &'static str, line: usize, s: &str) -> Result<T> {
    s.parse().map_err(|_| parse_err(what, line, format!("not a number: {s:?}")))
}

pub fn parse_figure3(text: &str) -> Result<Vec<ForgetfulProfile>> {
    const W: &str = "figure3";
    let lines = data_lines(text);
    let mut out = Vec::new();
    for (line, l) in lines.iter().skip(1) {
        let f = fields(W, *line, l, 7)?;
        let dim: DimMonomial = f[2].parse().map_err(|e: String| parse_err(W, *line, e))?;
        out.push(ForgetfulProfile {
            orbit: num(W, *line, f[0])?,
            label: num(W, *line, f[1])?,
            dim,
            m0: num(W, *line, f[3])?,
            m125: num(W, *line, f[4])?,
            m3: num(W, *line, f[5])?,
            m4: num(W, *line, f[6])?,
        });
    }
    Ok(out)
}

/// Columns `(orbit type, [X₀..X₅])` in file order.
pub fn parse_figure2(text: &str) -> Result<Vec<(usize, [u32; 6])>> {
    const W: &str = "figure2";
    let lines = data_lines(text);
    if lines.len() != 7 {
        return Err(parse_err(W, 0, format!("expected 7 data lines, found {}", lines.len())));
    }
    let row = |i: usize, head: &str| -> Result<Vec<u32>> {
        let (line, l) = lines[i];
        let mut f = l.split('\t');
        if f.next() != Some(head) {
            return Err(parse_err(W, line, format!("expected row {head}")));
        }
        f.map(|s| num(W, line, s)).collect()
    };
    let orbits = row(0, "orbit")?;
    let mut cols: Vec<(usize, [u32; 6])> = orbits.iter().map(|o| (*o as usize, [0; 6])).collect();
    for k in 0..6 {
        let r = row(k + 1, &format!("X{k}"))?;
        if r.len() != cols.len() {
            return Err(parse_err(W, lines[k + 1].0, "ragged row"));
        }
        for (c, v) in cols.iter_mut().zip(r) {
            c.1[k] = v;
        }
    }
    Ok(cols)
}

pub fn parse_orbit_vectors(text: &str) -> Result<Vec<OrbitVector>> {
    const W: &str = "orbit45";
    let mut out = Vec::new();
    for (line, l) in data_lines(text).iter().skip(1) {
        let f = fields(W, *line, l, 9)?;
        let mut o = [0u32; 9];
        for (x, s) in o.iter_mut().zip(f) {
            *x = num(W, *line, s)?;
        }
        out.push(o);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantsFixture {
    pub ir33: Vec<u32>,
    pub ir44: Vec<u32>,
    pub k: [Vec<u32>; 4],
    pub rhs: Vec<u32>,
}

pub fn parse_constants(text: &str) -> Result<ConstantsFixture> {
    const W: &str = "constants";
    let mut ir33 = None;
    let mut ir44 = None;
    let mut k: [Option<Vec<u32>>; 4] = Default::default();
    let mut rhs = None;
    for (line, l) in data_lines(text) {
        let mut f = l.split('\t');
        let key = f.next().unwrap_or_default();
        let vals: Vec<u32> = f.map(|s| num(W, line, s)).collect::<Result<_>>()?;
        match key {
            "ir33" => ir33 = Some(vals),
            "ir44" => ir44 = Some(vals),
            "rhs" => rhs = Some(vals),
            _ => match key.strip_prefix('K').and_then(|r| r.parse::<usize>().ok()) {
                Some(r) if r < 4 => k[r] = Some(vals),
                _ => return Err(parse_err(W, line, format!("unknown key {key:?}"))),
            },
        }
    }
    let missing = |n: &str| parse_err(W, 0, format!("missing {n}"));
    let [k0, k1, k2, k3] = k;
    Ok(ConstantsFixture {
        ir33: ir33.ok_or_else(|| missing("ir33"))?,
        ir44: ir44.ok_or_else(|| missing("ir44"))?,
        k: [
            k0.ok_or_else(|| missing("K0"))?,
            k1.ok_or_else(|| missing("K1"))?,
            k2.ok_or_else(|| missing("K2"))?,
            k3.ok_or_else(|| missing("K3"))?,
        ],
        rhs: rhs.ok_or_else(|| missing("rhs"))?,
    })
}

/// Fixture directory shipped with the repository.
pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_fixtures_parse() {
        let f = FixtureSet::new(default_dir());
        assert_eq!(parse_figure3(&f.read(FIGURE3).unwrap()).unwrap().len(), 21);
        let cols = parse_figure2(&f.read(FIGURE2).unwrap()).unwrap();
        assert_eq!(cols.len(), 36);
        assert_eq!(cols.iter().filter(|c| c.1[0] == 1).count(), 6);
        assert_eq!(parse_orbit_vectors(&f.read(ORBIT45).unwrap()).unwrap().len(), 45);
        let c = parse_constants(&f.read(CONSTANTS).unwrap()).unwrap();
        assert!(c.k.iter().all(|r| r.len() == 29));
        assert_eq!(c.rhs, vec![15, 12, 12, 15]);
    }

    #[test]
    fn missing_fixture_is_reported() {
        let f = FixtureSet::new("/nonexistent-fixture-dir");
        assert!(matches!(f.read(FIGURE3), Err(CertError::FixtureMissing { .. })));
    }

    #[test]
    fn diff_reports_changed_line() {
        let text = "# c\na\nb\n";
        let d = diff_data("x", text, &["a".into(), "c".into()]);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].index, 1);
        assert!(diff_data("x", text, &["a".into(), "b".into()]).is_empty());
    }

    #[test]
    fn digest_is_stable() {
        assert_eq!(
            sha256_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }
}
