//! Naive reference implementation of the herding model.
//!
//! Written directly from the model equations with plain arrays, explicit
//! neighbor sets and no shared code with `shepherd-core`. Only used by tests
//! as an independent oracle.

pub type V = [f64; 2];

fn add(a: V, b: V) -> V {
    [a[0] + b[0], a[1] + b[1]]
}
fn sub(a: V, b: V) -> V {
    [a[0] - b[0], a[1] - b[1]]
}
fn scale(k: f64, a: V) -> V {
    [k * a[0], k * a[1]]
}
fn norm(a: V) -> f64 {
    (a[0] * a[0] + a[1] * a[1]).sqrt()
}

pub fn phi(x: V) -> V {
    let n = norm(x);
    if n == 0.0 {
        [0.0, 0.0]
    } else {
        [x[0] / n, x[1] / n]
    }
}

pub fn psi(x: V, r_under: f64) -> V {
    let n = norm(x);
    if n >= r_under {
        [x[0] / (n * n * n), x[1] / (n * n * n)]
    } else if n > 0.0 {
        [
            x[0] / (n * r_under * r_under),
            x[1] / (n * r_under * r_under),
        ]
    } else {
        [0.0, 0.0]
    }
}

/// `w1*a1 + w2*a2 + w3*a3 + w4*a4`, summed left to right.
fn weighted_sum(w: &[f64; 4], terms: [V; 4]) -> V {
    let mut s = scale(w[0], terms[0]);
    for i in 1..4 {
        s = add(s, scale(w[i], terms[i]));
    }
    s
}

/// `|N|^-1 * sum`, or zero for an empty set.
fn mean(terms: &[V]) -> V {
    if terms.is_empty() {
        return [0.0, 0.0];
    }
    let mut s = [0.0, 0.0];
    for &t in terms {
        s = add(s, t);
    }
    [s[0] / terms.len() as f64, s[1] / terms.len() as f64]
}

#[derive(Debug, Clone)]
pub struct Params {
    pub c: [f64; 4],
    pub r: f64,
    pub r_prime: f64,
    pub d: [f64; 4],
    pub alpha: f64,
    pub theta: f64,
    pub r_under: f64,
    pub r_ots: f64,
    pub d_ots: f64,
    pub goal: V,
    pub goal_radius: f64,
    /// -1 for the alignment sign as printed, +1 for the conventional sign.
    pub alignment_sign: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Policy {
    Proposed,
    Fat,
    FatOcc,
    Ots,
}

#[derive(Debug, Clone, PartialEq)]
pub struct State {
    pub sheep: Vec<V>,
    /// u_i(t-1)
    pub sheep_prev: Vec<V>,
    pub shepherds: Vec<V>,
    pub path_len: Vec<f64>,
}

/// N_i(t)
pub fn sheep_sheep_set(s: &State, p: &Params, i: usize) -> Vec<usize> {
    let mut set = Vec::new();
    for j in 0..s.sheep.len() {
        let dist = norm(sub(s.sheep[i], s.sheep[j]));
        if 0.0 < dist && dist < p.r {
            set.push(j);
        }
    }
    set
}

/// M_i(t)
pub fn sheep_shepherd_set(s: &State, p: &Params, i: usize) -> Vec<usize> {
    let mut set = Vec::new();
    for l in 0..s.shepherds.len() {
        let dist = norm(sub(s.sheep[i], s.shepherds[l]));
        if 0.0 < dist && dist < p.r {
            set.push(l);
        }
    }
    set
}

/// N'_k(t)
pub fn shepherd_sheep_set(s: &State, p: &Params, k: usize) -> Vec<usize> {
    let mut set = Vec::new();
    for j in 0..s.sheep.len() {
        let dist = norm(sub(s.shepherds[k], s.sheep[j]));
        if 0.0 < dist && dist < p.r_prime {
            set.push(j);
        }
    }
    set
}

/// M'_k(t)
pub fn shepherd_shepherd_set(s: &State, p: &Params, k: usize) -> Vec<usize> {
    let mut set = Vec::new();
    for l in 0..s.shepherds.len() {
        let dist = norm(sub(s.shepherds[k], s.shepherds[l]));
        if 0.0 < dist && dist < p.r_prime {
            set.push(l);
        }
    }
    set
}

pub fn sheep_movement(s: &State, p: &Params, i: usize) -> V {
    let n_set = sheep_sheep_set(s, p, i);
    let m_set = sheep_shepherd_set(s, p, i);
    let pi = s.sheep[i];

    let u1 = scale(
        -1.0,
        mean(
            &n_set
                .iter()
                .map(|&j| psi(sub(s.sheep[j], pi), p.r_under))
                .collect::<Vec<_>>(),
        ),
    );
    let u2 = scale(
        p.alignment_sign,
        mean(
            &n_set
                .iter()
                .map(|&j| phi(s.sheep_prev[j]))
                .collect::<Vec<_>>(),
        ),
    );
    let u3 = mean(
        &n_set
            .iter()
            .map(|&j| phi(sub(s.sheep[j], pi)))
            .collect::<Vec<_>>(),
    );
    let u4 = scale(
        -1.0,
        mean(
            &m_set
                .iter()
                .map(|&l| psi(sub(s.shepherds[l], pi), p.r_under))
                .collect::<Vec<_>>(),
        ),
    );

    weighted_sum(&p.c, [u1, u2, u3, u4])
}

/// Index of the visible sheep maximizing the weighted score; first index
/// among exact ties.
pub fn weighted_target(s: &State, p: &Params, k: usize, alpha: f64) -> Option<usize> {
    let q = s.shepherds[k];
    let visible = shepherd_sheep_set(s, p, k);
    let scores: Vec<f64> = visible
        .iter()
        .map(|&j| {
            let rel_goal = sub(s.sheep[j], p.goal);
            let rel_self = sub(rel_goal, sub(q, p.goal));
            norm(rel_goal) - alpha * norm(rel_self)
        })
        .collect();
    let best = scores.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    visible
        .iter()
        .zip(&scores)
        .find(|(_, &sc)| sc == best)
        .map(|(&j, _)| j)
}

fn heading_diff(a: f64, b: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut d = (a - b).rem_euclid(two_pi);
    if d > std::f64::consts::PI {
        d = two_pi - d;
    }
    d
}

/// N'_{k,occ}(t): nearest-first, admit when every admitted heading differs
/// by more than theta.
pub fn occlusion_set(s: &State, p: &Params, k: usize) -> Vec<usize> {
    let q = s.shepherds[k];
    let mut order = shepherd_sheep_set(s, p, k);
    order.sort_by(|&a, &b| {
        let da = norm(sub(s.sheep[a], q));
        let db = norm(sub(s.sheep[b], q));
        da.partial_cmp(&db).unwrap().then(a.cmp(&b))
    });
    let mut admitted: Vec<usize> = Vec::new();
    for i in order {
        let rel_i = sub(s.sheep[i], q);
        let ok = admitted.iter().all(|&f| {
            let rel_f = sub(s.sheep[f], q);
            heading_diff(rel_i[1].atan2(rel_i[0]), rel_f[1].atan2(rel_f[0])) > p.theta
        });
        if ok {
            admitted.push(i);
        }
    }
    admitted.sort();
    admitted
}

pub fn ots_target(s: &State, p: &Params) -> V {
    let n = s.sheep.len() as f64;
    let mut total = [0.0, 0.0];
    for &pi in &s.sheep {
        total = add(total, pi);
    }
    let center = [total[0] / n, total[1] / n];
    let mut far = 0;
    for i in 1..s.sheep.len() {
        if norm(sub(center, s.sheep[i])) > norm(sub(center, s.sheep[far])) {
            far = i;
        }
    }
    let p_far = s.sheep[far];
    if norm(sub(p_far, center)) <= p.r_ots {
        add(center, scale(p.d_ots, phi(sub(center, p.goal))))
    } else {
        add(center, scale(p.d_ots, phi(sub(p_far, center))))
    }
}

pub fn shepherd_velocity(s: &State, p: &Params, k: usize, policy: Policy) -> V {
    let q = s.shepherds[k];
    // positions relative to the shepherd through the goal frame,
    // (a - x_g) - (q_k - x_g)
    let rel = |a: V| sub(sub(a, p.goal), sub(q, p.goal));

    let v1 = match policy {
        Policy::Proposed => weighted_target(s, p, k, p.alpha).map(|j| phi(rel(s.sheep[j]))),
        Policy::Fat | Policy::FatOcc => weighted_target(s, p, k, 0.0).map(|j| phi(rel(s.sheep[j]))),
        Policy::Ots => Some(phi(rel(ots_target(s, p)))),
    }
    .unwrap_or([0.0, 0.0]);

    let keep_set = match policy {
        Policy::FatOcc => occlusion_set(s, p, k),
        _ => shepherd_sheep_set(s, p, k),
    };
    let v2 = scale(
        -1.0,
        mean(
            &keep_set
                .iter()
                .map(|&j| psi(rel(s.sheep[j]), p.r_under))
                .collect::<Vec<_>>(),
        ),
    );

    let v3 = scale(-1.0, phi(sub(p.goal, q)));

    let m_set = shepherd_shepherd_set(s, p, k);
    let v4 = scale(
        -norm(sub(q, p.goal)),
        mean(
            &m_set
                .iter()
                .map(|&l| psi(rel(s.shepherds[l]), p.r_under))
                .collect::<Vec<_>>(),
        ),
    );

    weighted_sum(&p.d, [v1, v2, v3, v4])
}

/// One synchronous update.
pub fn step(s: &State, p: &Params, policy: Policy) -> State {
    let u: Vec<V> = (0..s.sheep.len())
        .map(|i| sheep_movement(s, p, i))
        .collect();
    let v: Vec<V> = (0..s.shepherds.len())
        .map(|k| shepherd_velocity(s, p, k, policy))
        .collect();
    State {
        sheep: s
            .sheep
            .iter()
            .zip(&u)
            .map(|(&pi, &ui)| add(pi, ui))
            .collect(),
        sheep_prev: u,
        shepherds: s
            .shepherds
            .iter()
            .zip(&v)
            .map(|(&qk, &vk)| add(qk, vk))
            .collect(),
        path_len: s
            .path_len
            .iter()
            .zip(&v)
            .map(|(&l, &vk)| l + norm(vk))
            .collect(),
    }
}

pub fn all_in_goal(s: &State, p: &Params) -> bool {
    s.sheep
        .iter()
        .all(|&pi| norm(sub(pi, p.goal)) <= p.goal_radius)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heading_diff_wraps() {
        let pi = std::f64::consts::PI;
        assert!((heading_diff(pi - 0.01, -pi + 0.01) - 0.02).abs() < 1e-12);
        assert!((heading_diff(0.03, 0.0) - 0.03).abs() < 1e-15);
    }
}
