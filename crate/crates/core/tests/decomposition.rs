use z2susy::graded::GeneratorId;
use z2susy::induced::{build_DE, build_DEl};
use z2susy::modtools::catalog::{de_blocks, del_blocks};
use z2susy::modtools::{change_of_basis, extract_irrep_4d, ProbeBlock};

fn summarize(r: &z2susy::modtools::DecompositionReport) {
    for b in &r.blocks {
        println!(
            "{} dim={} closed={} rel={} matches={} printed_closed={:?}",
            b.block, b.dim, b.closure_passed, b.relations_pass, b.matches_reference, b.printed_basis_closed
        );
        for d in &b.diffs {
            println!("  diff {} {}: printed {} regenerated {}", d.generator, d.column, d.printed, d.regenerated);
        }
        for d in &b.basis_diffs {
            println!("  basis {}: printed {} corrected {}", d.label, d.printed, d.corrected);
        }
    }
}

#[test]
fn de_decomposition() {
    let r = change_of_basis(&build_DE(), &de_blocks()).unwrap();
    summarize(&r);
    assert_eq!(r.rank, 16);
    assert!(r.all_closed());
    let dims: Vec<usize> = r.blocks.iter().map(|b| b.dim).collect();
    assert_eq!(dims, vec![4, 4, 4, 4]);
    let b4 = r.blocks[3].rendered_table();
    assert_eq!(b4[&GeneratorId::Q10], vec!["E*chi", "0", "0", "E*u"]);
    let diffs: Vec<(String, String, String)> = r
        .blocks
        .iter()
        .flat_map(|b| b.diffs.iter().map(move |d| (b.block.clone(), d.column.clone(), d.regenerated.clone())))
        .collect();
    assert_eq!(diffs, vec![("DE.4".to_string(), "sigma".to_string(), "v".to_string())]);
    assert_eq!(r.blocks[1].printed_basis_closed, Some(false));
}

#[test]
fn del_decomposition() {
    let r = change_of_basis(&build_DEl(), &del_blocks()).unwrap();
    summarize(&r);
    assert_eq!(r.rank, 32);
    assert!(r.all_closed());
    let z = r.blocks[0].rendered_table()[&GeneratorId::Z].clone();
    assert_eq!(
        z,
        vec!["lam*u1", "u2", "v1", "lam*v2", "-lam*sigma2", "-sigma1", "-lam*chi2", "-chi1"]
    );
    // both copies carry the same table
    assert_eq!(r.blocks[0].action_table, r.blocks[1].action_table);
    assert_eq!(r.blocks[2].action_table, r.blocks[3].action_table);
}

#[test]
fn four_dim_irreps() {
    for block in [ProbeBlock::D1, ProbeBlock::D2] {
        for rescaled in [false, true] {
            let r = extract_irrep_4d(block, rescaled).unwrap();
            println!("{} rescaled={} matches={} {:?}", r.block, rescaled, r.matches_reference, r.diffs);
            assert!(r.closure_passed && r.relations_pass && r.matches_reference);
        }
    }
}

#[test]
fn inequivalence() {
    use z2susy::modtools::intertwiner_dim;
    use z2susy::GaussianRational as G;
    let del = change_of_basis(&build_DEl(), &del_blocks()).unwrap();
    let d1 = del.blocks[0].rep().unwrap();
    let d2 = del.blocks[2].rep().unwrap();
    for (e, l) in [(1, 2), (2, 3), (3, -1)] {
        let (e, l) = (G::from_int(e), G::from_int(l));
        assert_eq!(intertwiner_dim(&d1, &d2, &e, &l).unwrap(), 0);
        assert_eq!(intertwiner_dim(&d1, &del.blocks[1].rep().unwrap(), &e, &l).unwrap(), 1);
    }
    let de = change_of_basis(&build_DE(), &de_blocks()).unwrap();
    let reps: Vec<_> = de.blocks.iter().map(|b| b.rep().unwrap()).collect();
    for (i, a) in reps.iter().enumerate() {
        for (j, b) in reps.iter().enumerate() {
            let d = intertwiner_dim(a, b, &G::from_int(2), &G::from_int(0)).unwrap();
            assert_eq!(d, usize::from(i == j), "blocks {i},{j}");
        }
    }
}
