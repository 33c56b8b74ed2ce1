use super::shift::{perm_pow, verify_shift, ShiftAutomorphism};
use super::ShiftError;
use crate::cellcore::{to_sparse, CellAlgebra, GradedAlgebra, SkewCellDatum, Tab};
use crate::exactmath::{Matrix, Scalar};

/// Orbit data of one σ_P-orbit representative λ.
#[derive(Clone, Debug)]
pub struct OrbitInfo {
    pub lambda: usize,
    /// The σ_P-orbit of λ in the order λ, σλ, σ²λ, ….
    pub orbit: Vec<usize>,
    pub o: usize,
    pub p: usize,
    /// Common orbit size of σ_λ = σ_T^{o_λ} on T(λ); k runs mod õ_λ.
    pub tilde_o: usize,
    pub eps_lambda: Scalar,
    /// σ_λ as a permutation of T(λ).
    pub sigma_lambda: Vec<usize>,
    /// T_σ(λ): the least tableau of each σ_λ-orbit.
    pub tab_reps: Vec<usize>,
    /// Index of (λ, 0) in the fixed-point poset.
    pub first: usize,
}

/// The fixed-point subalgebra A^σ with its verified skew cell datum.
#[derive(Clone, Debug)]
pub struct FixedPointResult {
    pub fixed: CellAlgebra,
    /// Column b is the fixed basis element b written in the ambient basis.
    pub embedding: Matrix,
    pub orbits: Vec<OrbitInfo>,
    /// (index into orbits, k) for every element of the new poset.
    pub elements: Vec<(usize, usize)>,
    pub s_p: usize,
    pub eps: Scalar,
    /// Every õ_λ ≤ 2 and the derived involution is the identity.
    pub cellular: bool,
}

impl FixedPointResult {
    pub fn index_of(&self, orbit: usize, k: usize) -> usize {
        let o = &self.orbits[orbit];
        o.first + k % o.tilde_o
    }

    /// The orbit whose representative is the ambient element l.
    pub fn orbit_of_rep(&self, l: usize) -> Option<usize> {
        self.orbits.iter().position(|o| o.lambda == l)
    }

    /// The ambient vector of c^{(k)}_{st} for tableau indices s, t in T(λ).
    pub fn shifted_vector(&self, ca: &CellAlgebra, s: &ShiftAutomorphism, orbit: usize, k: usize, x: usize, y: usize) -> Vec<Scalar> {
        shifted_vector(ca, s, &self.orbits[orbit], self.s_p, k, x, y)
    }
}

fn shifted_vector(ca: &CellAlgebra, sh: &ShiftAutomorphism, o: &OrbitInfo, s_p: usize, k: usize, x: usize, y: usize) -> Vec<Scalar> {
    let mut v = ca.alg.zero_vec();
    let mut t = y;
    for j in 0..o.tilde_o {
        let c = o.eps_lambda.pow((k * j) as i64);
        let b = ca.datum.basis_of[o.lambda][x][t];
        for l in 0..s_p {
            let bl = perm_pow(&sh.sigma_a, l, b);
            v[bl] = &v[bl] + &c;
        }
        t = o.sigma_lambda[t];
    }
    v
}

/// Builds A^σ with basis c^{(k)}_{st} = Σ_j ε_λ^{kj} σ̄(c_{s, σ_λ^j t}) and
/// verifies the resulting datum. ε must have order exactly s_p = |σ_A|.
pub fn fixed_point_datum(ca: &CellAlgebra, sh: &ShiftAutomorphism, eps: &Scalar) -> Result<FixedPointResult, ShiftError> {
    let alg = &ca.alg;
    let d = &ca.datum;
    let f = ca.field();
    let vr = verify_shift(alg, d, sh);
    if !vr.passed() {
        let msg: Vec<String> =
            vr.report.failures().iter().map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default())).collect();
        return Err(ShiftError::ShiftNotVerified(msg.join("; ")));
    }
    let s_p = vr.s_p;
    let c = f.characteristic();
    if c != 0 && s_p as u64 % c == 0 {
        return Err(ShiftError::CharDividesOrder { s_p, c });
    }
    if eps.descriptor() != f.descriptor() {
        return Err(crate::exactmath::MathError::DescriptorMismatch(eps.descriptor(), f.descriptor()).into());
    }
    let found = eps.multiplicative_order();
    if found != Some(s_p as u64) {
        return Err(ShiftError::BadRootOrder { expected: s_p, found });
    }
    if s_p == 1 {
        return Ok(identity_result(ca, eps));
    }

    // orbit representatives and tableau orbits
    let mut orbits = Vec::new();
    let mut first = 0;
    for l in 0..d.len() {
        let mut orbit = vec![l];
        let mut m = sh.sigma_p[l];
        while m != l {
            orbit.push(m);
            m = sh.sigma_p[m];
        }
        if orbit.iter().any(|&m| m < l) {
            continue;
        }
        let o = orbit.len();
        let k = d.tableaux[l].len();
        let sigma_lambda: Vec<usize> = (0..k).map(|t| sh.tab_pow(l, t, o).1).collect();
        let mut seen = vec![false; k];
        let mut tab_reps = Vec::new();
        let mut sizes = Vec::new();
        for t in 0..k {
            if seen[t] {
                continue;
            }
            tab_reps.push(t);
            let mut u = t;
            let mut n = 0;
            while !seen[u] {
                seen[u] = true;
                u = sigma_lambda[u];
                n += 1;
            }
            sizes.push(n);
        }
        let tilde_o = sizes[0];
        if sizes.iter().any(|&n| n != tilde_o) || s_p % tilde_o != 0 {
            return Err(ShiftError::FixedBasisMismatch(format!("σ_λ orbits on T({}) have sizes {sizes:?}", d.elements[l])));
        }
        orbits.push(OrbitInfo {
            lambda: l,
            orbit,
            o,
            p: s_p / o,
            tilde_o,
            eps_lambda: eps.pow((s_p / tilde_o) as i64),
            sigma_lambda,
            tab_reps,
            first,
        });
        first += tilde_o;
    }

    // the new basis
    let mut elements = Vec::new();
    let mut cols: Vec<Vec<Scalar>> = Vec::new();
    let mut labels = Vec::new();
    let mut degs = Vec::new();
    let mut basis_of = Vec::new();
    let mut tableaux = Vec::new();
    let mut names = Vec::new();
    for (oi, o) in orbits.iter().enumerate() {
        let tabs: Vec<Tab> = o.tab_reps.iter().map(|&t| d.tableaux[o.lambda][t].clone()).collect();
        for k in 0..o.tilde_o {
            elements.push((oi, k));
            names.push(format!("({},{k})", d.elements[o.lambda]));
            let mut rows = Vec::new();
            for (x, tx) in o.tab_reps.iter().zip(&tabs) {
                let mut row = Vec::new();
                for (y, ty) in o.tab_reps.iter().zip(&tabs) {
                    row.push(cols.len());
                    cols.push(shifted_vector(ca, sh, o, s_p, k, *x, *y));
                    labels.push(format!("c[{},{k}]({},{})", d.elements[o.lambda], tx.label, ty.label));
                    degs.push(tx.deg + ty.deg);
                }
                rows.push(row);
            }
            basis_of.push(rows);
            tableaux.push(tabs.clone());
        }
    }
    let m = cols.len();
    let n_orbits = {
        let mut seen = vec![false; alg.dim()];
        let mut n = 0;
        for b in 0..alg.dim() {
            if !seen[b] {
                n += 1;
                let mut x = b;
                while !seen[x] {
                    seen[x] = true;
                    x = sh.sigma_a[x];
                }
            }
        }
        n
    };
    let emb = Matrix::from_columns(f, alg.dim(), &cols);
    if emb.rank() != m || m != n_orbits {
        return Err(ShiftError::FixedBasisMismatch(format!(
            "{m} shifted elements of rank {} but A^σ has dimension {n_orbits}",
            emb.rank()
        )));
    }
    if let Some(b) = cols.iter().position(|v| sh.apply_vec(v) != *v) {
        return Err(ShiftError::FixedBasisMismatch(format!("{} is not σ-fixed", labels[b])));
    }

    // structure constants
    let mut prods = Vec::with_capacity(m * m);
    let sparse: Vec<_> = cols.iter().map(|v| to_sparse(v)).collect();
    for a in &sparse {
        for b in &sparse {
            prods.push(alg.mul_sparse(a, b));
        }
    }
    let coords = emb.solve(&Matrix::from_columns(f, alg.dim(), &prods)).map_err(|_| {
        ShiftError::FixedBasisMismatch("a product of fixed elements leaves the span".into())
    })?;
    let mut mult = vec![vec![Vec::new(); m]; m];
    for i in 0..m {
        for j in 0..m {
            mult[i][j] = to_sparse(&coords.column(i * m + j));
        }
    }
    let unit = emb
        .solve_vec(&alg.unit)
        .map_err(|_| ShiftError::FixedBasisMismatch("the unit is not in the span".into()))?;

    // * permutes the new basis; read off ι_σ from it
    let mut star = vec![0; m];
    for (b, v) in cols.iter().enumerate() {
        let sv = alg.star_vec(v);
        star[b] = cols
            .iter()
            .position(|w| *w == sv)
            .ok_or_else(|| ShiftError::FixedBasisMismatch(format!("({})* is not a basis element", labels[b])))?;
    }
    let np = elements.len();
    let mut iota = vec![usize::MAX; np];
    let mut iota_tab: Vec<Vec<usize>> = tableaux.iter().map(|t| vec![usize::MAX; t.len()]).collect();
    let mut cell_of = vec![(0, 0, 0); m];
    for (e, rows) in basis_of.iter().enumerate() {
        for (x, row) in rows.iter().enumerate() {
            for (y, &b) in row.iter().enumerate() {
                cell_of[b] = (e, x, y);
            }
        }
    }
    for (e, rows) in basis_of.iter().enumerate() {
        for (x, row) in rows.iter().enumerate() {
            for (y, &b) in row.iter().enumerate() {
                let (e2, x2, y2) = cell_of[star[b]];
                let clash = |cur: usize, new: usize| cur != usize::MAX && cur != new;
                if clash(iota[e], e2) || clash(iota_tab[e][y], x2) || clash(iota_tab[e][x], y2) {
                    return Err(ShiftError::FixedBasisMismatch(format!("* on {} does not come from an involution", labels[b])));
                }
                iota[e] = e2;
                iota_tab[e][y] = x2;
                iota_tab[e][x] = y2;
            }
        }
    }

    let above: Vec<Vec<bool>> = elements
        .iter()
        .map(|&(a, _)| {
            elements
                .iter()
                .map(|&(b, _)| {
                    let (la, lb) = (orbits[a].lambda, orbits[b].lambda);
                    la != lb && orbits[a].orbit.iter().any(|&x| d.above[x][lb])
                })
                .collect()
        })
        .collect();

    let new_alg = GradedAlgebra { field: f, labels, deg: degs, mult, star, unit };
    let datum = SkewCellDatum { elements: names, above, iota, tableaux, iota_tab, basis_of };
    let cellular = orbits.iter().all(|o| o.tilde_o <= 2) && datum.is_cellular();
    let fixed = CellAlgebra::new(new_alg, datum)?;
    Ok(FixedPointResult { fixed, embedding: emb, orbits, elements, s_p, eps: eps.clone(), cellular })
}

/// σ = id: A^σ = A with the same datum.
fn identity_result(ca: &CellAlgebra, eps: &Scalar) -> FixedPointResult {
    let f = ca.field();
    let d = &ca.datum;
    let orbits: Vec<OrbitInfo> = (0..d.len())
        .map(|l| {
            let k = d.tableaux[l].len();
            OrbitInfo {
                lambda: l,
                orbit: vec![l],
                o: 1,
                p: 1,
                tilde_o: 1,
                eps_lambda: f.one(),
                sigma_lambda: (0..k).collect(),
                tab_reps: (0..k).collect(),
                first: l,
            }
        })
        .collect();
    FixedPointResult {
        fixed: ca.clone(),
        embedding: Matrix::identity(f, ca.alg.dim()),
        elements: (0..d.len()).map(|l| (l, 0)).collect(),
        orbits,
        s_p: 1,
        eps: eps.clone(),
        cellular: d.is_cellular(),
    }
}
