//! Implementations of the individual subcommands. Every command writes
//! deterministic text: identical inputs produce identical bytes.

use crate::dot::poset_dot;
use crate::error::CliError;
use crate::files::{
    load_algebra, load_poset, render_json, AlgebraFile, PosetFile,
};
use crate::fixtures;
use homlat_core::algebra::congruence_lattice;
use homlat_core::hom::{core_of, count_homs, find_hom};
use homlat_core::homlat::{has_trivial_subalgebra, sub_hom_poset};
use homlat_core::order::{covering_forest, downset_lattice, Poset};
use homlat_core::synth::synthesize_quasiprimal;
use homlat_core::Budget;
use serde::Serialize;
use std::fmt::Write as _;

pub fn budget_from(flag: Option<usize>) -> Budget {
    flag.map(Budget::uniform).unwrap_or_default()
}

fn cover_lines(p: &Poset) -> String {
    let mut out = String::new();
    for &(a, b) in p.covers() {
        writeln!(out, "  {} < {}", p.name(a), p.name(b)).unwrap();
    }
    out
}

pub fn cmd_forest(
    poset_arg: &str,
    dot: bool,
    json: bool,
    reduce: bool,
    budget: Option<usize>,
) -> Result<String, CliError> {
    #[derive(Serialize)]
    struct ForestJson {
        base: PosetFile,
        words: Vec<String>,
        phi: Vec<String>,
        order: PosetFile,
    }
    let p = load_poset(poset_arg, reduce)?;
    let forest = covering_forest(&p, &budget_from(budget))?;
    if dot {
        return Ok(poset_dot(forest.order(), "covering-forest"));
    }
    if json {
        return Ok(render_json(&ForestJson {
            base: PosetFile::from_poset(&p),
            words: forest.words().iter().map(|w| w.render(&p)).collect(),
            phi: forest.phi().iter().map(|&e| p.name(e).to_owned()).collect(),
            order: PosetFile::from_poset(forest.order()),
        }));
    }
    let mut out = String::new();
    writeln!(
        out,
        "covering forest of a {}-element poset: {} words",
        p.size(),
        forest.len()
    )
    .unwrap();
    writeln!(out, "words (word -> phi):").unwrap();
    for (i, w) in forest.words().iter().enumerate() {
        writeln!(out, "  {} -> {}", w.render(&p), p.name(forest.phi()[i])).unwrap();
    }
    writeln!(out, "covers (lower < upper):").unwrap();
    out.push_str(&cover_lines(forest.order()));
    Ok(out)
}

pub fn cmd_synth(
    poset_arg: &str,
    reduce: bool,
    output: Option<&std::path::Path>,
    budget: Option<usize>,
) -> Result<String, CliError> {
    let p = load_poset(poset_arg, reduce)?;
    let bundle = synthesize_quasiprimal(&p, &budget_from(budget))?;
    let file = AlgebraFile::from_algebra(
        &bundle.q,
        Some(format!(
            "quasi-primal algebra synthesized from a {}-element poset",
            p.size()
        )),
        true,
    );
    let rendered = render_json(&file);
    match output {
        Some(path) => {
            std::fs::write(path, &rendered)
                .map_err(|e| CliError::validation(format!("{}: {e}", path.display())))?;
            Ok(format!(
                "wrote algebra of size {} to {}\n",
                bundle.q.size(),
                path.display()
            ))
        }
        None => Ok(rendered),
    }
}

pub fn cmd_homlattice(
    algebra_arg: &str,
    assume_quasiprimal: bool,
    dot: bool,
    json: bool,
    budget: Option<usize>,
) -> Result<String, CliError> {
    let (file, algebra) = load_algebra(algebra_arg)?;
    if !file.quasiprimal && !assume_quasiprimal {
        return Err(CliError::usage(
            "input does not carry the synthesis marker; pass --assume-quasiprimal \
             to assert quasi-primality (it is not checked)",
        ));
    }
    let budget = budget_from(budget);
    let shp = sub_hom_poset(&algebra, &budget)?;
    let top = shp
        .order
        .top()
        .ok_or_else(|| CliError::NoTop("subalgebra hom order has no top".to_owned()))?;
    let base = if has_trivial_subalgebra(&algebra) {
        shp.order.without(top)
    } else {
        shp.order.clone()
    };
    let lattice = downset_lattice(&base, &budget)?;
    #[derive(Serialize)]
    struct HomLatticeJson {
        assumed_quasiprimal: bool,
        class_representatives: Vec<Vec<usize>>,
        class_order: PosetFile,
        lattice: PosetFile,
    }
    if dot {
        return Ok(poset_dot(lattice.poset(), "hom-lattice"));
    }
    if json {
        return Ok(render_json(&HomLatticeJson {
            assumed_quasiprimal: !file.quasiprimal,
            class_representatives: shp.representative_subuniverses.clone(),
            class_order: PosetFile::from_poset(&shp.order),
            lattice: PosetFile::from_poset(lattice.poset()),
        }));
    }
    let mut out = String::new();
    if !file.quasiprimal {
        writeln!(out, "note: quasi-primality asserted by --assume-quasiprimal").unwrap();
    }
    writeln!(
        out,
        "subalgebra hom order: {} classes over {} subalgebras",
        shp.order.size(),
        shp.subuniverses.len()
    )
    .unwrap();
    for (c, sub) in shp.representative_subuniverses.iter().enumerate() {
        let members = shp.class_of.iter().filter(|&&x| x == c).count();
        writeln!(
            out,
            "  class {} (representative {{{}}}, {} subalgebra{})",
            shp.order.name(c),
            sub.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","),
            members,
            if members == 1 { "" } else { "s" },
        )
        .unwrap();
    }
    writeln!(out, "class order covers:").unwrap();
    out.push_str(&cover_lines(&shp.order));
    writeln!(out, "homomorphism lattice: {} elements", lattice.size()).unwrap();
    for i in 0..lattice.size() {
        writeln!(out, "  {}", lattice.poset().name(i)).unwrap();
    }
    writeln!(out, "lattice covers:").unwrap();
    out.push_str(&cover_lines(lattice.poset()));
    Ok(out)
}

pub fn cmd_con(
    algebra_arg: &str,
    dot: bool,
    json: bool,
    budget: Option<usize>,
) -> Result<String, CliError> {
    #[derive(Serialize)]
    struct ConJson {
        congruences: Vec<Vec<Vec<usize>>>,
        lattice: PosetFile,
    }
    let (_, algebra) = load_algebra(algebra_arg)?;
    let (congruences, lattice) = congruence_lattice(&algebra, &budget_from(budget))?;
    if dot {
        return Ok(poset_dot(lattice.poset(), "congruence-lattice"));
    }
    if json {
        return Ok(render_json(&ConJson {
            congruences: congruences.iter().map(|c| c.blocks()).collect(),
            lattice: PosetFile::from_poset(lattice.poset()),
        }));
    }
    let mut out = String::new();
    writeln!(out, "congruences: {}", congruences.len()).unwrap();
    for c in &congruences {
        writeln!(out, "  {} ({} blocks)", c.render(), c.num_blocks()).unwrap();
    }
    writeln!(out, "lattice covers:").unwrap();
    out.push_str(&cover_lines(lattice.poset()));
    Ok(out)
}

pub fn cmd_hom(
    source_arg: &str,
    target_arg: &str,
    count: bool,
    json: bool,
) -> Result<String, CliError> {
    #[derive(Serialize)]
    struct CountJson {
        count: u64,
    }
    #[derive(Serialize)]
    struct MapJson {
        map: Option<Vec<usize>>,
    }
    let (_, a) = load_algebra(source_arg)?;
    let (_, b) = load_algebra(target_arg)?;
    if count {
        let n = count_homs(&a, &b)?;
        return Ok(if json {
            render_json(&CountJson { count: n })
        } else {
            format!("{n}\n")
        });
    }
    let witness = find_hom(&a, &b)?;
    if json {
        return Ok(render_json(&MapJson {
            map: witness.as_ref().map(|w| w.map.clone()),
        }));
    }
    Ok(match witness {
        Some(w) => {
            let mut out = String::from("homomorphism found:\n");
            for (x, y) in w.map.iter().enumerate() {
                writeln!(out, "  {x} -> {y}").unwrap();
            }
            out
        }
        None => "no homomorphism\n".to_owned(),
    })
}

pub fn cmd_core(algebra_arg: &str, json: bool) -> Result<String, CliError> {
    let (_, a) = load_algebra(algebra_arg)?;
    let core = core_of(&a);
    if json {
        return Ok(render_json(&AlgebraFile::from_algebra(
            &core,
            Some("core".to_owned()),
            false,
        )));
    }
    Ok(format!(
        "core size: {} (input size {})\n",
        core.size(),
        a.size()
    ))
}

pub fn cmd_fixtures(name: Option<&str>) -> Result<String, CliError> {
    match name {
        None => {
            let mut out = String::new();
            for name in fixtures::NAMES {
                writeln!(out, "{name}").unwrap();
            }
            Ok(out)
        }
        Some(name) => fixtures::render(name)
            .ok_or_else(|| CliError::usage(format!("unknown builtin fixture `{name}`"))),
    }
}
