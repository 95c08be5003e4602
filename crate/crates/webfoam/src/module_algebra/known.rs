//! The explicitly known modules of the catalogue webs.

use super::quotient::{quotient_module, Presentation};
use super::{F2Module, ModuleError};

pub const KNOWN_MODULES: [&str; 10] = [
    "unknot",
    "unlink_n",
    "theta",
    "tetrahedron",
    "hopf",
    "lhc",
    "trefoil",
    "tangled_handcuffs",
    "k33",
    "kinoshita_theta",
];

pub const THETA_RELATIONS: [&str; 3] = ["u1+u2+u3", "u1*u2+u1*u3+u2*u3+1", "u1*u2*u3"];

fn quotient(gens: &[&str], rels: &[&str]) -> F2Module {
    let p = Presentation::parse(gens, rels).expect("built-in presentation parses");
    quotient_module(&p)
        .expect("built-in presentation is finite")
        .even()
}

/// `F[u]/(u^3+u)`.
pub fn unknot() -> F2Module {
    quotient(&["u"], &["u^3+u"])
}

pub fn theta() -> F2Module {
    quotient(&["u1", "u2", "u3"], &THETA_RELATIONS)
}

/// Opposite edges `u_i`, `v_i` act identically.
pub fn tetrahedron() -> F2Module {
    let mut rels: Vec<&str> = THETA_RELATIONS.to_vec();
    rels.extend(["v1+u1", "v2+u2", "v3+u3"]);
    quotient(&["u1", "u2", "u3", "v1", "v2", "v3"], &rels)
}

/// Tensor power of the unknot, one operator `u1..un` per component.
pub fn unlink(n: usize) -> F2Module {
    let mut m = F2Module::scalar(&[], true);
    for i in 1..=n {
        let name = format!("u{i}");
        let factor = unknot().aliased(&[(&name, "u")]).expect("unknot operator");
        m = m.tensor(&factor).expect("distinct names");
    }
    m
}

/// `F[u1,u2,v]/(v, u1+u2, u1^2+1)`.
pub fn lhc_m() -> F2Module {
    quotient(&["u1", "u2", "v"], &["v", "u1+u2", "u1^2+1"])
}

/// `U ⊕ θ`; on `U` both components act by `u`, on `θ` they are two of the edges.
pub fn hopf() -> F2Module {
    let u = unknot()
        .aliased(&[("u1", "u"), ("u2", "u")])
        .expect("unknot operator");
    let t = theta()
        .aliased(&[("u1", "u1"), ("u2", "u2")])
        .expect("theta operators");
    u.direct_sum(&t).expect("same operators")
}

/// `M ⊕ M{1}`.
pub fn lhc() -> F2Module {
    let m = lhc_m();
    m.direct_sum(&m.shift()).expect("same operators")
}

/// `N ⊕ M ⊕ M ⊕ M{1}` with `N` one-dimensional and `M = F[u]/(u^2+1)`.
pub fn trefoil() -> F2Module {
    let n = F2Module::scalar(&["u"], false);
    let m = quotient(&["u"], &["u^2+1"]);
    F2Module::direct_sum_all(&[n, m.clone(), m.clone(), m.shift()]).expect("same operators")
}

pub fn known_module(name: &str) -> Result<F2Module, ModuleError> {
    if let Some(n) = name.strip_prefix("unlink_") {
        let n: usize = n
            .parse()
            .map_err(|_| ModuleError::UnknownModule(name.into()))?;
        return Ok(unlink(n));
    }
    Ok(match name {
        "unknot" => unknot(),
        "theta" => theta(),
        "tetrahedron" => tetrahedron(),
        "hopf" => hopf(),
        "lhc" | "linked_handcuffs" => lhc(),
        "trefoil" => trefoil(),
        "tangled_handcuffs" => F2Module::zero(),
        "k33" => F2Module::direct_sum_all(&[F2Module::plain(6, false), F2Module::plain(6, true)])?,
        "kinoshita_theta" | "kinoshita" => F2Module::plain(6, false),
        _ => return Err(ModuleError::UnknownModule(name.into())),
    })
}
