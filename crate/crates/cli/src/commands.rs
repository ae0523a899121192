use plethy_core::induction::{ch_ind_class_function, InducedCharacter};
use plethy_core::plethysm::plethysm_convolution_route;
use plethy_core::vecpart::monomial_count;
use plethy_core::{
    ch_ind_permutation_module, ch_ind_sign, ch_ind_trivial, count_pk, count_qk,
    enumerate_vector_partitions, h_series, matrix_orbit_character, matrix_orbit_sign_character,
    partitions_of, plethysm_into_series, polynomial_weights, run_suite, Basis, ClassFunction,
    ExponentVector, InducedSource, LatticeVector, Partition, RestrictionEngine, Route, Suite,
    SuiteBounds, VectorPartitionTable,
};

use crate::args::{
    Caps, ChIndArgs, InductionRoute, PlethysmArgs, RestrictArgs, RouteChoice, Source, SuiteChoice,
    VariantChoice, VecpartArgs, VerifyArgs,
};
use crate::render::{self, RestrictionRecord};
use crate::CliError;

fn check_caps(caps: &Caps, n: usize, d: usize, table_bytes: u128) -> Result<(), CliError> {
    if n > caps.n_cap {
        return Err(CliError::ResourceCap(format!(
            "n = {n} exceeds the cap of {} (raise with --n-cap)",
            caps.n_cap
        )));
    }
    if d > caps.degree_cap {
        return Err(CliError::ResourceCap(format!(
            "degree {d} exceeds the cap of {} (raise with --degree-cap)",
            caps.degree_cap
        )));
    }
    if table_bytes > u128::from(caps.memory()) {
        return Err(CliError::ResourceCap(format!(
            "estimated table size of {table_bytes} bytes exceeds the limit of {} bytes \
             (raise with --max-mem or PLETHY_MAX_MEM)",
            caps.memory()
        )));
    }
    Ok(())
}

fn require_positive(n: usize) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Invalid("n must be at least 1".into()));
    }
    Ok(())
}

pub fn restrict(args: &RestrictArgs, caps: &Caps) -> Result<String, CliError> {
    let n = args.n;
    require_positive(n)?;
    let d = match (args.d, &args.lambda) {
        (Some(d), Some(lambda)) if lambda.weight() != d => {
            return Err(CliError::Invalid(format!("λ = {lambda} does not have weight {d}")))
        }
        (Some(d), _) => d,
        (None, Some(lambda)) => lambda.weight(),
        (None, None) => return Err(CliError::Invalid("either --d or --lambda is required".into())),
    };
    check_caps(caps, n, d, VectorPartitionTable::estimated_bytes(n, d as u32, n))?;

    let lambdas = match &args.lambda {
        Some(lambda) if lambda.len() > n => {
            return Err(CliError::Invalid(format!("λ = {lambda} has more than {n} parts")))
        }
        Some(lambda) => vec![lambda.clone()],
        None => polynomial_weights(d, n),
    };
    let (trivial, sign) = (Partition::row(n), Partition::column(n));
    let mus = match &args.mu {
        Some(mu) if mu.weight() != n => {
            return Err(CliError::Invalid(format!("μ = {mu} is not a partition of {n}")))
        }
        Some(mu) if args.route == RouteChoice::Corollary && *mu != trivial && *mu != sign => {
            return Err(CliError::Invalid(format!(
                "the corollary route only covers μ = {trivial} and μ = {sign}"
            )))
        }
        Some(mu) => vec![mu.clone()],
        None if args.route == RouteChoice::Corollary => {
            let mut both = vec![trivial.clone()];
            if sign != trivial {
                both.push(sign.clone());
            }
            both
        }
        None => partitions_of(n),
    };
    let routes: Vec<Route> = match args.route {
        RouteChoice::Littlewood => vec![Route::Littlewood],
        RouteChoice::Corollary => vec![Route::Corollary],
        RouteChoice::Brute => vec![Route::BruteForce],
        RouteChoice::All => Route::ALL.to_vec(),
    };

    let mut engine = RestrictionEngine::new(n);
    let mut records = Vec::new();
    let mut disagreements = Vec::new();
    for lambda in &lambdas {
        for mu in &mus {
            let cell = engine.cell(lambda, mu, &routes)?;
            if !cell.agree() {
                disagreements.push(format!(
                    "n={n} d={d} λ={lambda} μ={mu}: littlewood {:?}, corollary {:?}, brute {:?}",
                    cell.littlewood, cell.corollary, cell.brute
                ));
            }
            records.push(RestrictionRecord::new(n, d, &cell));
        }
    }
    let mut columns: Vec<&str> = routes.iter().map(|r| r.name()).collect();
    if routes.len() > 1 {
        columns.push("agree");
    }
    let output = render::restriction_records(&records, args.format, &columns)?;
    if disagreements.is_empty() {
        Ok(output)
    } else {
        Err(CliError::Disagreement {
            output,
            cells: disagreements,
        })
    }
}

fn render_parts(parts: &[ExponentVector]) -> String {
    let inner: Vec<String> = parts.iter().map(ToString::to_string).collect();
    format!("{{{}}}", inner.join(", "))
}

pub fn vecpart(args: &VecpartArgs, caps: &Caps) -> Result<String, CliError> {
    let coords = &args.x.0;
    let degree: u64 = coords.iter().map(|c| c.unsigned_abs()).sum();
    check_caps(caps, coords.len(), degree as usize, 0)?;
    let x = LatticeVector::new(coords.clone());
    let count = match args.variant {
        VariantChoice::P => count_pk(x.clone(), args.k),
        VariantChoice::Q => count_qk(x.clone(), args.k),
    };
    let mut out = format!("{count}\n");
    if args.enumerate {
        if let Some(x) = x.to_exponent() {
            let k = args.k;
            let listed: Vec<Vec<ExponentVector>> = match args.variant {
                VariantChoice::P => enumerate_vector_partitions(&x, false)
                    .into_iter()
                    .filter(|parts| parts.len() <= k)
                    .collect(),
                VariantChoice::Q => enumerate_vector_partitions(&x, true)
                    .into_iter()
                    .filter(|parts| parts.len() == k || parts.len() + 1 == k)
                    .collect(),
            };
            for parts in &listed {
                out.push_str(&render_parts(parts));
                out.push('\n');
            }
        }
    }
    Ok(out)
}

pub fn plethysm(args: &PlethysmArgs, caps: &Caps) -> Result<String, CliError> {
    require_positive(args.n)?;
    let max_row = args
        .f
        .terms()
        .map(|(l, _)| l.part(0).max(l.len()))
        .max()
        .unwrap_or(0);
    check_caps(
        caps,
        args.n,
        args.d,
        VectorPartitionTable::estimated_bytes(args.n, args.d as u32, max_row),
    )?;
    let d = args.d as u32;
    let g = h_series(args.n, d);
    let full = match args.f.basis() {
        Basis::H | Basis::E | Basis::S => plethysm_convolution_route(&args.f, &g, d)?,
        Basis::P | Basis::M => plethysm_into_series(&args.f, &g, d)?,
    };
    render::polynomial(&full.homogeneous_component(d), args.d, args.format)
}

fn induction_degree_of(source: &Source) -> Option<usize> {
    match source {
        Source::Permutation(mu) | Source::Irreducible(mu) => Some(mu.weight()),
        _ => None,
    }
}

pub fn ch_ind(args: &ChIndArgs, caps: &Caps) -> Result<String, CliError> {
    let n = match (args.n, induction_degree_of(&args.source)) {
        (Some(n), Some(m)) if n != m => {
            return Err(CliError::Invalid(format!("--n {n} does not match the source, which needs n = {m}")))
        }
        (_, Some(m)) => m,
        (Some(n), None) => n,
        (None, None) => return Err(CliError::Invalid("--n is required for this source".into())),
    };
    require_positive(n)?;
    let d = args.d as u32;
    let table_bytes = match args.route {
        InductionRoute::Formula => VectorPartitionTable::estimated_bytes(n, d, n),
        // every orbit stores one representative matrix
        InductionRoute::Orbit => monomial_count(n * n, d).saturating_mul((n * n * 4 + 24) as u128),
    };
    check_caps(caps, n, args.d, table_bytes)?;

    let character: InducedCharacter = match (args.route, &args.source) {
        (InductionRoute::Formula, Source::Trivial) => ch_ind_trivial(n, d)?,
        (InductionRoute::Formula, Source::Sign) => ch_ind_sign(n, d)?,
        (InductionRoute::Formula, Source::Permutation(mu)) => ch_ind_permutation_module(mu, d)?,
        (InductionRoute::Formula, Source::Irreducible(mu)) => ch_ind_class_function(
            &ClassFunction::irreducible(mu),
            d,
            InducedSource::Irreducible(mu.clone()),
        )?,
        (InductionRoute::Formula, Source::Regular) => {
            ch_ind_class_function(&ClassFunction::regular(n), d, InducedSource::Regular)?
        }
        (InductionRoute::Orbit, Source::Trivial) => matrix_orbit_character(&Partition::row(n), d)?,
        (InductionRoute::Orbit, Source::Sign) => matrix_orbit_sign_character(n, d)?,
        (InductionRoute::Orbit, Source::Permutation(mu)) => matrix_orbit_character(mu, d)?,
        (InductionRoute::Orbit, Source::Regular) => matrix_orbit_character(&Partition::column(n), d)?,
        (InductionRoute::Orbit, Source::Irreducible(_)) => {
            return Err(CliError::Invalid(
                "the orbit route covers trivial, sign, regular and perm: sources".into(),
            ))
        }
    };
    render::polynomial(&character.character, args.d, args.format)
}

pub fn verify(args: &VerifyArgs, caps: &Caps) -> Result<String, CliError> {
    let suites: Vec<Suite> = match args.suite {
        SuiteChoice::CompleteElementary => vec![Suite::CompleteElementary],
        SuiteChoice::Orbit => vec![Suite::Orbit],
        SuiteChoice::Littlewood => vec![Suite::Littlewood],
        SuiteChoice::Unimodality => vec![Suite::Unimodality],
        SuiteChoice::Adjunction => vec![Suite::Adjunction],
        SuiteChoice::All => Suite::ALL.to_vec(),
    };
    let bounds = SuiteBounds {
        n: args.n,
        d: args.d,
        k: args.k,
        max_sum: args.max_sum,
        max_n: args.max_n,
    };
    let widest = args.n.max(args.max_n);
    let deepest = args.d.max(args.max_sum);
    check_caps(
        caps,
        widest,
        deepest,
        VectorPartitionTable::estimated_bytes(args.n, args.d as u32, args.n.max(args.k)),
    )?;

    let mut out = String::new();
    let mut failed = false;
    for suite in suites {
        let report = run_suite(suite, &bounds)?;
        if report.passed() {
            out.push_str(&format!("PASS {suite}: {} checks\n", report.checks));
        } else {
            failed = true;
            out.push_str(&format!(
                "FAIL {suite}: {} checks, {} failures\n",
                report.checks,
                report.failures.len()
            ));
            for failure in report.failures.iter().take(10) {
                out.push_str(&format!("  {failure}\n"));
            }
        }
    }
    if failed {
        Err(CliError::Disagreement {
            output: out,
            cells: Vec::new(),
        })
    } else {
        Ok(out)
    }
}
