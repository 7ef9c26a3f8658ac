//! Builds reports from the solver, tagging failures with the stage that
//! produced them.

use rayon::prelude::*;

use pslet_core::pslet::DEFAULT_ENERGY_ORDER;
use pslet_core::tables::{self, Column, PADE_ORDERS, TABLE5_PADE, TABLE5_TERMS, TERMS};
use pslet_core::{
    build_pade, dni_eigenvalue, energy_series, pade, riccati_recursion, EnergySeries, OracleConfig, PsletContext,
};

use crate::report::{
    nums, ContextReport, EnergyReport, Num, OracleReport, PadeReport, PointReport, SeriesReport, TableColumn,
    TableReport,
};
use crate::CliError;

/// What to compute at one point.
#[derive(Debug, Clone, Copy, Default)]
pub struct Request {
    pub series: bool,
    pub terms: Option<usize>,
    pub pade: Option<(usize, usize)>,
    pub oracle: bool,
}

fn stage(name: &'static str) -> impl FnOnce(pslet_core::Error) -> CliError {
    move |source| CliError::Solver { stage: name, source }
}

pub fn check_pade_order(n: usize, m: usize) -> Result<(), CliError> {
    if m != n && m != n + 1 {
        return Err(CliError::Usage(format!("denominator degree must be N or N + 1, got [{n}, {m}]")));
    }
    if n + m > DEFAULT_ENERGY_ORDER + 1 {
        return Err(CliError::Usage(format!(
            "[{n}, {m}] needs {} series coefficients, {} are computed",
            n + m + 1,
            DEFAULT_ENERGY_ORDER + 2
        )));
    }
    Ok(())
}

struct Expansion {
    context: PsletContext,
    series: EnergySeries,
}

fn expand(alpha: f64, l: u32) -> Result<Expansion, CliError> {
    let context = PsletContext::solve(alpha, l).map_err(stage("expansion point"))?;
    let jet = context
        .potential()
        .taylor_jet(context.q0, 2 * DEFAULT_ENERGY_ORDER + 4)
        .map_err(stage("potential derivatives"))?;
    let tables = riccati_recursion(&context, &jet, DEFAULT_ENERGY_ORDER).map_err(stage("recursion"))?;
    let series = energy_series(&context, &tables).map_err(stage("energy series"))?;
    Ok(Expansion { context, series })
}

fn oracle(alpha: f64, l: u32) -> Result<OracleReport, CliError> {
    let cfg = OracleConfig::new(alpha, l);
    let r = dni_eigenvalue(&cfg).map_err(stage("oracle"))?;
    Ok(OracleReport {
        energy: Num(r.energy),
        nodes: r.nodes,
        iterations: r.iterations,
        residual: Num(r.residual),
        q_max: Num(r.q_max),
        matching_point: Num(r.matching_point),
        mesh_n: cfg.mesh_n,
    })
}

fn pade_report(exp: &Expansion, n: usize, m: usize) -> Result<PadeReport, CliError> {
    let value = pade::pade_energy(&exp.context, &exp.series, n, m).map_err(stage("padé"))?;
    let coeffs = pade::resummed_coefficients(&exp.series);
    // the α → 0 fallback has no approximant to report
    let (numerator, denominator, condition) = match build_pade(&coeffs, n, m) {
        Ok(p) => (nums(&p.num), nums(&p.den), p.condition),
        Err(_) if exp.context.alpha < pade::HARMONIC_FALLBACK_ALPHA => (Vec::new(), Vec::new(), 0.0),
        Err(e) => return Err(stage("padé")(e)),
    };
    Ok(PadeReport {
        n,
        m,
        value: Num(value),
        numerator,
        denominator,
        condition: Num(condition),
        oracle_defect: None,
    })
}

pub fn point(alpha: f64, l: u32, req: Request) -> Result<PointReport, CliError> {
    let needs_expansion = req.series || req.terms.is_some() || req.pade.is_some();
    let exp = needs_expansion.then(|| expand(alpha, l)).transpose()?;
    let oracle = req.oracle.then(|| oracle(alpha, l)).transpose()?;
    let defect = |v: f64| oracle.as_ref().map(|o| Num((v - o.energy.0).abs()));

    let mut report = PointReport {
        alpha: Num(alpha),
        l,
        context: None,
        series: None,
        energy: None,
        pade: None,
        oracle: None,
    };
    if let Some(exp) = &exp {
        let ctx = &exp.context;
        report.context = Some(ContextReport {
            q0: Num(ctx.q0),
            omega: Num(ctx.omega),
            beta: Num(ctx.beta),
            lbar: Num(ctx.lbar),
            q_scale: Num(ctx.q_scale),
            q0_residual: Num(ctx.q0_residual()),
        });
        report.series = Some(SeriesReport {
            normalization_factor: Num(exp.series.normalization_factor),
            eps_m2: Num(exp.series.eps_m2),
            eps_m1: Num(exp.series.eps_m1),
            eps: nums(&exp.series.eps),
            partial_sums: nums(&exp.series.partial_sums()),
        });
        if let Some(terms) = req.terms {
            let value = exp.series.partial_sum(terms).map_err(stage("energy series"))?;
            report.energy = Some(EnergyReport { terms, value: Num(value), oracle_defect: defect(value) });
        }
        if let Some((n, m)) = req.pade {
            let mut p = pade_report(exp, n, m)?;
            p.oracle_defect = defect(p.value.0);
            report.pade = Some(p);
        }
    }
    report.oracle = oracle;
    Ok(report)
}

/// Points for every `(α, l)` in α-major input order, computed in parallel.
pub fn sweep(alphas: &[f64], ls: &[u32], req: Request) -> Result<Vec<PointReport>, CliError> {
    let cells: Vec<(f64, u32)> = alphas.iter().flat_map(|&a| ls.iter().map(move |&l| (a, l))).collect();
    cells.par_iter().map(|&(a, l)| point(a, l, req)).collect()
}

fn title(id: u8) -> &'static str {
    match id {
        1 => "Ground-state partial sums K = 1..10 versus anharmonicity",
        2 => "Partial sums versus angular momentum at alpha = 1/2",
        3 => "Ground-state Pade approximants versus anharmonicity",
        4 => "Pade approximants versus angular momentum at alpha = 1/2",
        _ => "Six-term sum, [3,3] Pade approximant and numerical integration",
    }
}

fn partial_sum_column(col: &Column, with_oracle: bool) -> Result<TableColumn, CliError> {
    let exp = expand(col.alpha, col.l)?;
    let values: Vec<f64> = (1..=TERMS)
        .map(|k| exp.series.partial_sum(k))
        .collect::<Result<_, _>>()
        .map_err(stage("energy series"))?;
    finish_column(col, values, with_oracle)
}

fn pade_column(col: &Column, with_oracle: bool) -> Result<TableColumn, CliError> {
    let exp = expand(col.alpha, col.l)?;
    let values = PADE_ORDERS
        .iter()
        .map(|&(n, m)| pade::pade_energy(&exp.context, &exp.series, n, m))
        .collect::<Result<Vec<_>, _>>()
        .map_err(stage("padé"))?;
    finish_column(col, values, with_oracle)
}

fn finish_column(col: &Column, values: Vec<f64>, with_oracle: bool) -> Result<TableColumn, CliError> {
    let want_oracle = with_oracle || col.oracle_decimals.is_some();
    let oracle = want_oracle.then(|| oracle(col.alpha, col.l)).transpose()?.map(|o| o.energy.0);
    Ok(TableColumn {
        label: col.label.to_string(),
        alpha: Num(col.alpha),
        l: col.l,
        decimals: vec![col.decimals; values.len()],
        defects: oracle.map(|o| values.iter().map(|v| Num((v - o).abs())).collect()),
        values: nums(&values),
        oracle: oracle.map(Num),
        oracle_decimals: oracle.map(|_| col.oracle_decimals.unwrap_or(col.decimals)),
    })
}

fn comparison_column(row: &tables::ComparisonRow, with_oracle: bool) -> Result<TableColumn, CliError> {
    let exp = expand(row.alpha, 0)?;
    let k6 = exp.series.partial_sum(TABLE5_TERMS).map_err(stage("energy series"))?;
    let (n, m) = TABLE5_PADE;
    let p33 = pade::pade_energy(&exp.context, &exp.series, n, m).map_err(stage("padé"))?;
    let values = vec![k6, p33];
    let want_oracle = with_oracle || row.oracle_decimals.is_some();
    let oracle = want_oracle.then(|| oracle(row.alpha, 0)).transpose()?.map(|o| o.energy.0);
    Ok(TableColumn {
        label: row.label.to_string(),
        alpha: Num(row.alpha),
        l: 0,
        decimals: vec![row.partial_decimals, row.pade_decimals],
        defects: oracle.map(|o| values.iter().map(|v| Num((v - o).abs())).collect()),
        values: nums(&values),
        oracle: oracle.map(Num),
        oracle_decimals: oracle.map(|_| row.oracle_decimals.unwrap_or(row.pade_decimals)),
    })
}

pub fn table(id: u8, with_oracle: bool) -> Result<TableReport, CliError> {
    let k_labels = || (1..=TERMS).map(|k| format!("K={k}")).collect::<Vec<_>>();
    let pade_labels = || PADE_ORDERS.iter().map(|(n, m)| format!("[{n},{m}]")).collect::<Vec<_>>();
    let (row_labels, columns) = match id {
        1 => (k_labels(), collect(&tables::TABLE1, |c| partial_sum_column(c, with_oracle))?),
        2 => (k_labels(), collect(&tables::TABLE2, |c| partial_sum_column(c, with_oracle))?),
        3 => (pade_labels(), collect(&tables::TABLE3, |c| pade_column(c, with_oracle))?),
        4 => (pade_labels(), collect(&tables::TABLE4, |c| pade_column(c, with_oracle))?),
        5 => (
            vec![format!("K={TABLE5_TERMS}"), format!("[{},{}]", TABLE5_PADE.0, TABLE5_PADE.1)],
            collect(&tables::TABLE5, |r| comparison_column(r, with_oracle))?,
        ),
        _ => return Err(CliError::Usage(format!("table id must be 1..=5, got {id}"))),
    };
    Ok(TableReport { id, title: title(id).to_string(), row_labels, columns })
}

fn collect<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> Result<TableColumn, CliError> + Sync + Send,
) -> Result<Vec<TableColumn>, CliError> {
    items.par_iter().map(f).collect()
}
