use proptest::prelude::*;
use stochastik::export::{
    parse_dieharder_text, read_trajectory_csv, write_dieharder_text, write_generator_text,
    write_raw_binary, write_trajectory_csv, StreamHeader,
};
use stochastik_core::prng::XorShiftStar;
use stochastik_core::processes::{cumulative_trajectory, wiener_trajectory, TimeGrid, Trajectory};
use stochastik_core::{Generator, GeneratorKind};

fn csv(traj: &Trajectory) -> String {
    let mut buf = Vec::new();
    let n = write_trajectory_csv(&mut buf, traj).unwrap();
    assert_eq!(n, buf.len() as u64);
    String::from_utf8(buf).unwrap()
}

#[test]
fn single_zero_value() {
    let mut buf = Vec::new();
    write_dieharder_text(&mut buf, StreamHeader::new(1, 64).unwrap(), [0]).unwrap();
    assert!(buf.ends_with(b"numbit: 64\n0\n"));
}

#[test]
fn raw_single_word() {
    let mut buf = Vec::new();
    assert_eq!(write_raw_binary(&mut buf, [1]).unwrap(), 8);
    assert_eq!(buf, [1, 0, 0, 0, 0, 0, 0, 0]);
}

#[test]
fn raw_replay_is_identical() {
    let stream = |seed| {
        let mut g = GeneratorKind::Kiss.build(seed).unwrap();
        let mut buf = Vec::new();
        write_raw_binary(&mut buf, (0..1000).map(|_| g.next_word())).unwrap();
        buf
    };
    assert_eq!(stream(5).len(), 8000);
    assert_eq!(stream(5), stream(5));
    assert_ne!(stream(5), stream(6));
}

#[test]
fn generator_text_round_trips() {
    let mut g = GeneratorKind::Icg.build(9).unwrap();
    let mut buf = Vec::new();
    write_generator_text(&mut buf, &mut g, 500, 32).unwrap();
    let (h, words) = parse_dieharder_text(buf.as_slice()).unwrap();
    assert_eq!(h.count(), 500);
    let mut again = GeneratorKind::Icg.build(9).unwrap();
    assert!(words.iter().all(|&w| w == again.next_word()));
    assert!(!buf.ends_with(b"\n\n"));
}

#[test]
fn small_trajectory_rows() {
    let grid = TimeGrid::new(0.0, 0.1, 2).unwrap();
    let traj = cumulative_trajectory(grid, 1, [1.0, -1.0]).unwrap();
    assert_eq!(
        csv(&traj),
        "t,w1\n0,0\n0.10000000000000001,1\n0.20000000000000001,0\n"
    );
}

#[test]
fn header_width_follows_dims() {
    let grid = TimeGrid::new(0.0, 0.5, 2).unwrap();
    let traj = wiener_trajectory(XorShiftStar::new(3).unwrap(), grid, 3).unwrap();
    let text = csv(&traj);
    assert_eq!(text.lines().next(), Some("t,w1,w2,w3"));
}

proptest! {
    #[test]
    fn csv_round_trip_is_exact(seed in 1u64.., dims in 1usize..4, steps in 1usize..50) {
        let grid = TimeGrid::new(0.0, 0.01, steps).unwrap();
        let traj = wiener_trajectory(XorShiftStar::new(seed).unwrap(), grid, dims).unwrap();
        let table = read_trajectory_csv(csv(&traj).as_bytes()).unwrap();
        prop_assert_eq!(table.rows.len(), traj.rows());
        for (i, row) in table.rows.iter().enumerate() {
            prop_assert_eq!(row[0].to_bits(), grid.time(i).to_bits());
            for (a, b) in row[1..].iter().zip(traj.row(i)) {
                prop_assert_eq!(a.to_bits(), b.to_bits());
            }
        }
    }
}
