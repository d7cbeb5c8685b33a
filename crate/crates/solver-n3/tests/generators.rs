use cube_core::{Dims, MoveTable};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use solver_n3::cluster::Toolkit;
use solver_n3::conj::triple_orbit;
use solver_n3::perm::{generator_frame, generator_perm};
use solver_n3::{all_frames, cluster_positions, express_three_cycle, Perm};

/// Applies `seq` to labelled stickers and returns the relabelling.
fn sticker_perm(table: &MoveTable, seq: &[cube_core::Move]) -> Vec<usize> {
    let mut data: Vec<usize> = (0..table.layout().len()).collect();
    table.apply_sequence(seq, &mut data);
    data
}

fn inner_pair(rng: &mut ChaCha8Rng, n: usize) -> (usize, usize) {
    let x = rng.gen_range(1..n / 2);
    let mut y = rng.gen_range(1..n / 2);
    while y == x {
        y = rng.gen_range(1..n / 2);
    }
    (x, y)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn commutator_moves_three_stickers_of_its_cluster(frame in 0usize..24, n in 6usize..=24, a in 0usize..100, b in 0usize..100) {
        let x = 1 + a % (n / 2 - 1);
        let y = 1 + b % (n / 2 - 1);
        prop_assume!(x != y);
        let table = MoveTable::new(Dims::cube(n));
        let seq = all_frames()[frame].sequence(x, y, n);
        prop_assert_eq!(seq.len(), 10);
        let data = sticker_perm(&table, &seq);
        let changed: Vec<usize> = (0..data.len()).filter(|&i| data[i] != i).collect();
        prop_assert_eq!(changed.len(), 3);
        let cluster: Vec<usize> = cluster_positions(x, y, n).unwrap().iter().map(|p| p.index(table.layout())).collect();
        prop_assert!(changed.iter().all(|i| cluster.contains(i)));
        let thrice: Vec<_> = seq.iter().chain(&seq).chain(&seq).copied().collect();
        let data = sticker_perm(&table, &thrice);
        prop_assert!(data.iter().enumerate().all(|(i, &j)| i == j));
    }
}

#[test]
fn every_frame_realizes_its_table_entry() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let n = rng.gen_range(6..=24);
        let (x, y) = inner_pair(&mut rng, n);
        let table = MoveTable::new(Dims::cube(n));
        let idx: Vec<usize> = cluster_positions(x, y, n).unwrap().iter().map(|p| p.index(table.layout())).collect();
        for g in 0..24 {
            let data = sticker_perm(&table, &generator_frame(g).sequence(x, y, n));
            // data[to] = from
            let mut images: Vec<usize> = (0..24).collect();
            for (b, &to) in idx.iter().enumerate() {
                let a = idx.iter().position(|&q| q == data[to]).expect("stays in the cluster");
                images[a] = b;
            }
            assert_eq!(Perm::from_images(images).unwrap(), generator_perm(g), "g={g} ({x}, {y}) n={n}");
        }
    }
}

#[test]
fn first_frame_is_the_first_entry() {
    let f = generator_frame(0);
    assert_eq!(f, all_frames()[0]);
    assert_eq!(generator_perm(0).to_string(), "(1 2 12)");
}

#[test]
fn ordered_triples_form_one_orbit() {
    let gens: Vec<Perm> = (0..24).map(generator_perm).collect();
    assert_eq!(triple_orbit(24, &gens, [0, 1, 2]), 12144);
    assert!(gens.iter().all(|g| !g.is_odd()));
}

#[test]
fn random_three_cycles_compose_correctly() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let gens: Vec<Perm> = (0..24).map(generator_perm).collect();
    let mut longest = 0;
    for _ in 0..200 {
        let mut pts: Vec<usize> = (0..24).collect();
        pts.shuffle(&mut rng);
        let t = [pts[0], pts[1], pts[2]];
        let word = express_three_cycle(t);
        longest = longest.max(word.len());
        let mut p = Perm::identity(24);
        for g in &word {
            p = p.then(&g.perm(&gens));
        }
        assert_eq!(p, Perm::three_cycle(24, t));
    }
    let bound = 2 * Toolkit::frozen().table.depth() + 1;
    assert!(longest <= bound);
}

#[test]
fn reversed_cycle_uses_the_inverse_word() {
    let gens: Vec<Perm> = (0..24).map(generator_perm).collect();
    let w = express_three_cycle([0, 2, 1]);
    let mut p = Perm::identity(24);
    for g in &w {
        p = p.then(&g.perm(&gens));
    }
    assert_eq!(p, Perm::three_cycle(24, [0, 1, 2]).inverse());
}
