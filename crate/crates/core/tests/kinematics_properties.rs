use proptest::prelude::*;
use synchrony_core::kinematics::{
    edwards_transform, einstein_velocity, eta, induced_synchrony, lorentz_transform, map_velocity,
    one_way_speed, resynchronize, superluminal_transform, transform_between, Direction, Event, FrameSpec,
    LabeledEvent, TransformCoeffs,
};

fn textbook_boost(e: Event, beta: f64) -> Event {
    let gamma = 1.0 / (1.0 - beta * beta).sqrt();
    Event::new(gamma * (e.t - beta * e.x), gamma * (e.x - beta * e.t), e.y, e.z)
}

fn scale(a: Event, b: Event) -> f64 {
    [a.t, a.x, b.t, b.x].iter().fold(1.0f64, |m, v| m.max(v.abs()))
}

fn rel_err(a: Event, b: Event, source: Event) -> f64 {
    let d = (a.t - b.t).abs().max((a.x - b.x).abs());
    d / scale(a, source)
}

fn event() -> impl Strategy<Value = Event> {
    (-1e3f64..1e3, -1e3f64..1e3, -10.0f64..10.0, -10.0f64..10.0).prop_map(|(t, x, y, z)| Event::new(t, x, y, z))
}

fn frame(label: &'static str) -> impl Strategy<Value = FrameSpec> {
    (-0.95f64..0.95, -1.0f64..=1.0).prop_map(move |(b, k)| FrameSpec::new(label, b, k).unwrap())
}

proptest! {
    #[test]
    fn lorentz_recovery(e in event(), beta in -0.99f64..0.99) {
        let got = edwards_transform(e, beta, 0.0, 0.0).unwrap();
        prop_assert!(rel_err(got, textbook_boost(e, beta), e) <= 1e-12);
        prop_assert_eq!(got, lorentz_transform(e, beta).unwrap());
    }

    #[test]
    fn superluminal_recovery(e in event(), beta in -0.99f64..0.99) {
        let k_prime = induced_synchrony(0.0, beta).unwrap();
        prop_assert_eq!(k_prime, -beta);
        let via_edwards = edwards_transform(e, beta, 0.0, k_prime).unwrap();
        let closed = superluminal_transform(e, beta).unwrap();
        prop_assert!(rel_err(via_edwards, closed, e) <= 1e-12);
    }

    #[test]
    fn absolute_simultaneity(t in -1e3f64..1e3, x1 in -1e3f64..1e3, x2 in -1e3f64..1e3, beta in -0.99f64..0.99) {
        let a = superluminal_transform(Event::tx(t, x1), beta).unwrap();
        let b = superluminal_transform(Event::tx(t, x2), beta).unwrap();
        prop_assert_eq!(a.t, b.t);
        let c = TransformCoeffs::superluminal(beta).unwrap();
        prop_assert_eq!(c.a_tx, 0.0);
    }

    #[test]
    fn two_way_invariance(k in -0.999f64..0.999, length in 1e-3f64..1e3) {
        let cp = one_way_speed(k, Direction::PlusX).unwrap().as_f64();
        let cm = one_way_speed(k, Direction::MinusX).unwrap().as_f64();
        let mean = 2.0 * length / (length / cp + length / cm);
        prop_assert!((mean - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn gauge_factorization(
        e in event(),
        (beta, k) in (-0.95f64..0.95, -1.0f64..=1.0).prop_filter("degenerate eta", |&(b, k)| eta(b, k).is_ok()),
        kp in -1.0f64..=1.0,
    ) {
        let direct = edwards_transform(e, beta, k, kp).unwrap();
        let step = resynchronize(e, k, 0.0).unwrap();
        let step = lorentz_transform(step, einstein_velocity(beta, k).unwrap()).unwrap();
        let via = resynchronize(step, 0.0, kp).unwrap();
        prop_assert!(rel_err(direct, via, e) <= 1e-12, "{:?} vs {:?}", direct, via);
    }

    #[test]
    fn gauge_factorization_from_einstein_chart(e in event(), beta in -0.95f64..0.95, kp in -1.0f64..=1.0) {
        // with k = 0 the einstein velocity is beta itself
        let direct = edwards_transform(e, beta, 0.0, kp).unwrap();
        let via = resynchronize(lorentz_transform(resynchronize(e, 0.0, 0.0).unwrap(), beta).unwrap(), 0.0, kp).unwrap();
        prop_assert!(rel_err(direct, via, e) <= 1e-12);
    }

    #[test]
    fn resync_round_trip(e in event(), a in -1.0f64..=1.0, b in -1.0f64..=1.0) {
        let back = resynchronize(resynchronize(e, a, b).unwrap(), b, a).unwrap();
        prop_assert!(rel_err(back, e, e) <= 1e-12);
        prop_assert_eq!(back.x, e.x);
        prop_assert_eq!((back.y, back.z), (e.y, e.z));
    }

    #[test]
    fn resync_sets_one_way_speed(k_from in -0.99f64..0.99, k_to in -0.99f64..0.99, t in 0.1f64..10.0) {
        // +x light at speed 1/(1 - k_from): x = t / (1 - k_from)
        let e = Event::tx(t, t / (1.0 - k_from));
        let r = resynchronize(e, k_from, k_to).unwrap();
        prop_assert!((r.x / r.t - 1.0 / (1.0 - k_to)).abs() <= 1e-9 * (1.0 / (1.0 - k_to)));
    }

    #[test]
    fn invertibility(e in event(), a in frame("A"), b in frame("B")) {
        let src = LabeledEvent::new(e, "A").unwrap();
        let there = transform_between(&src, &a, &b).unwrap();
        let back = transform_between(&there, &b, &a).unwrap();
        prop_assert_eq!(back.chart(), "A");
        let bound = 1e-12;
        prop_assert!(rel_err(back.event(), e, e) <= bound);
    }

    #[test]
    fn groupoid_closure(e in event(), a in frame("A"), b in frame("B")) {
        let s = FrameSpec::absolute();
        let src = LabeledEvent::new(e, "S").unwrap();
        let two_legs = transform_between(&transform_between(&src, &s, &a).unwrap(), &a, &b).unwrap();
        let direct = transform_between(&src, &s, &b).unwrap();
        // oracle: compose the 2x2 matrices by hand
        let ma = a.from_absolute().unwrap();
        let mb = b.from_absolute().unwrap();
        let inv_det = 1.0 / (ma.a_tt * ma.a_xx - ma.a_tx * ma.a_xt);
        let (t1, x1) = (ma.a_tt * e.t + ma.a_tx * e.x, ma.a_xt * e.t + ma.a_xx * e.x);
        let (t0, x0) = ((ma.a_xx * t1 - ma.a_tx * x1) * inv_det, (-ma.a_xt * t1 + ma.a_tt * x1) * inv_det);
        let oracle = Event::new(mb.a_tt * t0 + mb.a_tx * x0, mb.a_xt * t0 + mb.a_xx * x0, e.y, e.z);
        prop_assert!(rel_err(two_legs.event(), direct.event(), e) <= 1e-12);
        prop_assert!(rel_err(direct.event(), oracle, e) <= 1e-12);
    }

    #[test]
    fn null_cone_bookkeeping(f in frame("F")) {
        prop_assume!(f.k() < 0.999);
        let s = FrameSpec::absolute();
        let plus = map_velocity(1.0, &s, &f).unwrap().as_f64();
        prop_assert!((plus - 1.0 / (1.0 - f.k())).abs() <= 1e-12 * (1.0 / (1.0 - f.k())).max(1.0) * 10.0);
        prop_assume!(f.k() > -0.999);
        let minus = map_velocity(-1.0, &s, &f).unwrap().as_f64();
        prop_assert!((minus + 1.0 / (1.0 + f.k())).abs() <= 1e-11 * (1.0 / (1.0 + f.k())).max(1.0));
    }

    #[test]
    fn einstein_velocity_composition(u in -0.99f64..0.99, v in -0.99f64..0.99) {
        let s = FrameSpec::absolute();
        let f = FrameSpec::einstein("F", v).unwrap();
        let got = map_velocity(u, &s, &f).unwrap().as_f64();
        prop_assert!((got - (u - v) / (1.0 - u * v)).abs() <= 1e-12);
    }
}
