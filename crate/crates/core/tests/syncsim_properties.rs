use proptest::prelude::*;
use synchrony_core::kinematics::{lorentz_transform, superluminal_transform, Event};
use synchrony_core::syncsim::{ClockLattice, NodeId, Protocol, SignalKind};

fn protocol() -> impl Strategy<Value = Protocol> {
    prop::sample::select(Protocol::ALL.to_vec())
}

/// Strictly increasing positions built from positive gaps.
fn positions() -> impl Strategy<Value = Vec<f64>> {
    (-5.0f64..5.0, prop::collection::vec(0.05f64..3.0, 1..6)).prop_map(|(start, gaps)| {
        let mut out = vec![start];
        for g in gaps {
            out.push(out.last().unwrap() + g);
        }
        out
    })
}

fn lattice(beta: f64, pos: &[f64], phase_seed: f64) -> ClockLattice {
    let phases: Vec<f64> = (0..pos.len()).map(|i| phase_seed * (i as f64 * 1.7).sin()).collect();
    ClockLattice::new(beta, pos).unwrap().with_phases(&phases).unwrap()
}

proptest! {
    #[test]
    fn signal_log_causality(beta in -0.9f64..0.9, pos in positions(), p in protocol(), seed in -5.0f64..5.0) {
        let mut lat = lattice(beta, &pos, seed);
        lat.run_protocol(p, NodeId(0)).unwrap();
        let last = NodeId(pos.len() - 1);
        lat.measure_one_way(NodeId(0), last, SignalKind::Light).unwrap();
        lat.measure_one_way(last, NodeId(0), SignalKind::Instantaneous).unwrap();
        lat.measure_two_way(last, NodeId(0), SignalKind::Finite { speed: 4.0 }).unwrap();
        for r in lat.log() {
            match r.kind {
                SignalKind::Instantaneous => prop_assert_eq!(r.absorb.t, r.emit.t),
                _ => prop_assert!(r.absorb.t > r.emit.t),
            }
            if r.kind == SignalKind::Light {
                let v = (r.absorb.x - r.emit.x) / (r.absorb.t - r.emit.t);
                prop_assert!((v.abs() - 1.0).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn two_way_universality(beta in -0.9f64..0.9, pos in positions(), p in protocol(), seed in -5.0f64..5.0) {
        let mut lat = lattice(beta, &pos, seed);
        lat.run_protocol(p, NodeId(0)).unwrap();
        for i in 1..pos.len() {
            let m = lat.measure_two_way(NodeId(i), NodeId(0), SignalKind::Light).unwrap();
            prop_assert!((m.speed.as_f64() - 1.0).abs() <= 1e-9);
        }
    }

    #[test]
    fn convention_realization(beta in -0.9f64..0.9, pos in positions(), seed in -5.0f64..5.0) {
        let last = NodeId(pos.len() - 1);
        let mut sl = lattice(beta, &pos, seed);
        sl.run_protocol(Protocol::Superluminal, NodeId(0)).unwrap();
        let fwd = sl.measure_one_way(NodeId(0), last, SignalKind::Light).unwrap().speed.as_f64();
        let bwd = sl.measure_one_way(last, NodeId(0), SignalKind::Light).unwrap().speed.as_f64();
        // chart k = -beta: c/(1 - k) forward, c/(1 + k) backward
        prop_assert!((fwd - 1.0 / (1.0 + beta)).abs() <= 1e-9);
        prop_assert!((bwd - 1.0 / (1.0 - beta)).abs() <= 1e-9);
        prop_assert!((sl.synchrony().unwrap() + beta).abs() <= 1e-9);

        let mut ei = lattice(beta, &pos, seed);
        ei.run_protocol(Protocol::Einstein, NodeId(0)).unwrap();
        for (a, b) in [(NodeId(0), last), (last, NodeId(0))] {
            let c = ei.measure_one_way(a, b, SignalKind::Light).unwrap().speed.as_f64();
            prop_assert!((c - 1.0).abs() <= 1e-9);
        }
        prop_assert!(ei.synchrony().unwrap().abs() <= 1e-9);
    }

    #[test]
    fn protocol_equivalence(beta in -0.9f64..0.9, pos in positions(), seed in -5.0f64..5.0, master in 0usize..6) {
        let master = NodeId(master % pos.len());
        let mut a = lattice(beta, &pos, seed);
        let mut b = a.clone();
        a.run_protocol(Protocol::Superluminal, master).unwrap();
        b.run_protocol(Protocol::ExternalRegulation, master).unwrap();
        for (x, y) in a.offsets().iter().zip(b.offsets()) {
            prop_assert!((x - y).abs() <= 1e-9);
        }
    }

    #[test]
    fn chart_consistency(beta in -0.9f64..0.9, pos in positions(), seed in -5.0f64..5.0, t in -10.0f64..10.0, dt in -3.0f64..3.0) {
        // readings minus chart time are one constant across nodes and instants
        let mut sl = lattice(beta, &pos, seed);
        sl.run_protocol(Protocol::Superluminal, NodeId(0)).unwrap();
        let mut ei = lattice(beta, &pos, seed);
        ei.run_protocol(Protocol::Einstein, NodeId(0)).unwrap();
        let gap = |lat: &ClockLattice, node: usize, t: f64, einstein: bool| {
            let n = lat.nodes()[node];
            let e = Event::tx(t, n.position_at(t, beta));
            let chart_t = if einstein {
                lorentz_transform(e, beta).unwrap().t
            } else {
                superluminal_transform(e, beta).unwrap().t
            };
            n.reading(t) - chart_t
        };
        let sl0 = gap(&sl, 0, t, false);
        let ei0 = gap(&ei, 0, t, true);
        for i in 0..pos.len() {
            prop_assert!((gap(&sl, i, t + dt, false) - sl0).abs() <= 1e-9);
            prop_assert!((gap(&ei, i, t + dt, true) - ei0).abs() <= 1e-9);
        }
    }
}

#[test]
fn at_rest_offsets_equal_master() {
    for p in Protocol::ALL {
        let mut lat = ClockLattice::new(0.0, &[0.0, 1.0, 2.0, 3.0]).unwrap();
        lat.run_protocol(p, NodeId(2)).unwrap();
        assert!(lat.offsets().iter().all(|o| o.abs() <= 1e-12), "{p}");
    }
}
