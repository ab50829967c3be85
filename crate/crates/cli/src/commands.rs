use std::path::Path;

use mws_core::code::{weights_exhaustive, GeneratorMatrix, ProjectiveMultiset, WeightDistribution};
use mws_core::constructions::{
    binary_full_spectrum, hyperplane_index_sum, powers_of_two, two_dim_strictly_compact,
};
use mws_core::field::FieldSpec;
use mws_core::io::{parse_code_file, parse_q, write_gmat, write_pmul, CodeFile};
use mws_core::search::{search_mws, SearchConfig, SearchMode};
use mws_core::spectrum::{classify, enumerate_weight_sets, length_from_spread, render_weight_sets};

use crate::{CmdError, Family, Format, Method, Mode};

type CmdResult = Result<(), CmdError>;

fn resolve_field(q: Option<&str>) -> Result<FieldSpec, CmdError> {
    let tok = q.ok_or_else(|| CmdError::Input("--q is required for this family".into()))?;
    Ok(parse_q(tok)?)
}

pub fn construct(
    family: Family,
    q: Option<&str>,
    k: Option<u32>,
    out: Option<&Path>,
    format: Option<Format>,
    json: bool,
) -> CmdResult {
    // native representation per family: matrices for bk/dq, multisets for
    // hsum/pow2; the other view is derived on demand
    let (matrix, multiset): (Option<GeneratorMatrix>, Option<ProjectiveMultiset>) = match family {
        Family::Bk => {
            if let Some(tok) = q {
                if parse_q(tok)?.q() != 2 {
                    return Err(CmdError::Input("bk is binary; use --q 2 or omit it".into()));
                }
            }
            let k = k.ok_or_else(|| CmdError::Input("--k is required for bk".into()))?;
            (Some(binary_full_spectrum(k)?), None)
        }
        Family::Dq => {
            if let Some(k) = k {
                if k != 2 {
                    return Err(CmdError::Input("dq is two-dimensional; use --k 2 or omit it".into()));
                }
            }
            let field = resolve_field(q)?;
            (Some(two_dim_strictly_compact(&field)?), None)
        }
        Family::Hsum => {
            let field = resolve_field(q)?;
            let k = k.ok_or_else(|| CmdError::Input("--k is required for hsum".into()))?;
            (None, Some(hyperplane_index_sum(&field, k)?))
        }
        Family::Pow2 => {
            let field = resolve_field(q)?;
            let k = k.ok_or_else(|| CmdError::Input("--k is required for pow2".into()))?;
            (None, Some(powers_of_two(&field, k, None)?))
        }
    };

    let format = format.unwrap_or(if matrix.is_some() { Format::Gmat } else { Format::Pmul });
    let (text, q_order, k_dim, wd) = match (&matrix, &multiset) {
        (Some(g), None) => {
            let text = match format {
                Format::Gmat => write_gmat(g),
                Format::Pmul => write_pmul(&ProjectiveMultiset::from_matrix(g)?),
            };
            (text, g.field().q(), g.k(), weights_exhaustive(g)?)
        }
        (None, Some(m)) => {
            let text = match format {
                Format::Pmul => write_pmul(m),
                Format::Gmat => write_gmat(&GeneratorMatrix::from_multiset(m)?),
            };
            let space = m.space();
            (text, space.field().q(), space.k(), m.weight_distribution()?)
        }
        _ => unreachable!(),
    };

    match out {
        Some(path) => std::fs::write(path, &text)?,
        None => print!("{text}"),
    }
    let report = classify(&wd, q_order, k_dim);
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(())
}

pub fn analyze(path: &Path, method: Method, json: bool) -> CmdResult {
    let text = std::fs::read_to_string(path)?;
    let file = parse_code_file(&text)?;

    let exhaustive = |file: &CodeFile| -> Result<WeightDistribution, CmdError> {
        let wd = match file {
            CodeFile::Matrix(g) => weights_exhaustive(g)?,
            CodeFile::Multiset(m) => weights_exhaustive(&GeneratorMatrix::from_multiset(m)?)?,
        };
        Ok(wd)
    };
    let projective = |file: &CodeFile| -> Result<WeightDistribution, CmdError> {
        let wd = match file {
            CodeFile::Matrix(g) => ProjectiveMultiset::from_matrix(g)?.weight_distribution()?,
            CodeFile::Multiset(m) => m.weight_distribution()?,
        };
        Ok(wd)
    };

    let (q, k) = match &file {
        CodeFile::Matrix(g) => (g.field().q(), g.k()),
        CodeFile::Multiset(m) => (m.space().field().q(), m.space().k()),
    };
    let wd = match method {
        Method::Exhaustive => exhaustive(&file)?,
        Method::Projective => projective(&file)?,
        Method::Both => {
            let a = exhaustive(&file)?;
            let b = projective(&file)?;
            if a != b {
                return Err(CmdError::Check(
                    "exhaustive and projective weight distributions disagree".into(),
                ));
            }
            a
        }
    };
    let report = classify(&wd, q, k);
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(())
}

pub fn enumerate(q: &str, k: u32, n: Option<u64>, delta: Option<u64>) -> CmdResult {
    let field = parse_q(q)?;
    let n = match (n, delta) {
        (Some(n), None) => n,
        (None, Some(delta)) => length_from_spread(field.q(), k, delta)?,
        _ => return Err(CmdError::Input("give exactly one of --n or --delta".into())),
    };
    let sets = enumerate_weight_sets(field.q(), k, n)?;
    print!("{}", render_weight_sets(&sets));
    Ok(())
}

pub fn search(
    q: &str,
    k: u32,
    n: usize,
    seed: u64,
    max_iters: u64,
    mode: Mode,
    out: Option<&Path>,
) -> CmdResult {
    let field = parse_q(q)?;
    let cfg = SearchConfig {
        field,
        k,
        n,
        seed,
        max_iters,
        mode: match mode {
            Mode::Randomized => SearchMode::Randomized,
            Mode::Exhaustive => SearchMode::Exhaustive,
        },
    };
    let outcome = search_mws(&cfg)?;
    for (restart, iter, energy) in &outcome.trace {
        eprintln!("restart {restart} iter {iter} energy {energy}");
    }
    eprintln!(
        "iterations {} restarts {}",
        outcome.iterations, outcome.restarts
    );
    match outcome.hit {
        Some(m) => {
            let text = write_pmul(&m);
            match out {
                Some(path) => std::fs::write(path, &text)?,
                None => print!("{text}"),
            }
            Ok(())
        }
        None => Err(CmdError::Check(format!(
            "no MWS multiset found for n={n} within {max_iters} iterations"
        ))),
    }
}
