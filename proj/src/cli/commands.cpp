// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "lbo/cli.hpp"
#include "lbo/errors.hpp"
#include "lbo/orbit.hpp"
#include "lbo/rng.hpp"
#include "lbo/slice.hpp"
#include "lbo/stabilizer.hpp"

namespace lbo::cli {
namespace {

constexpr double kViolation = 1e-8;
constexpr std::array<double, 4> kParameters{-0.9, -0.3, 0.3, 0.9};

Json reals(auto const& v)
{
    Json a = Json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k)
        a.push_back(static_cast<double>(v(k)));
    return a;
}

Json matrix_row_major(Mat4 const& m)
{
    Json a = Json::array();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            a.push_back(m(i, j));
    return a;
}

Json id_of(InputRecord const& record)
{
    return record.id ? Json(*record.id) : Json(nullptr);
}

// Residual allowed for the per-record consistency checks before the record is
// flagged as an invariant violation.
double violation_threshold(ToleranceConfig const& tol)
{
    return std::max(kViolation, 100 * tol.abs_tol);
}

struct Analysis
{
    Json report;
    bool violation = false;
    std::optional<OrbitClass> cls;
    std::optional<CanonicalForm> cf;
};

Analysis analyze(InputRecord const& record, Options const& options)
{
    Analysis a;
    Json& j = a.report;
    Bivector const& omega = record.omega;
    auto const [qa, qb] = quantities_AB(omega);
    j["index"] = record.index;
    j["id"] = id_of(record);
    j["A"] = qa;
    j["B"] = qb;
    j["pfaffian"] = pfaffian(omega);
    j["in_light_cone"] = in_light_cone(omega, options.tol);
    j["canonical"] = nullptr;
    j["class"] = nullptr;
    if (!j["in_light_cone"].get<bool>())
    {
        j["reason"] = qa <= options.tol.abs_tol
                          ? "A is zero"
                          : "A and B differ beyond the relative tolerance";
        return a;
    }

    a.cf = canonical_form(omega, options.tol);
    a.cls = orbit_class(omega, options.tol);
    j["canonical"] = {{"r", a.cf->r}, {"phi", a.cf->phi}};
    Json cls{{"kind", to_string(a.cls->kind)}, {"r0", a.cls->r0}};
    cls["epsilon"] = a.cls->is_neutral() ? Json(a.cls->epsilon) : Json(nullptr);
    j["class"] = cls;

    double const r = a.cf->r;
    double const reconstruction = (a.cf->reconstruct() - omega).norm() / r;

    SplitMix64 rng = SplitMix64(options.seed).split(record.index);
    Bivector const image = pushforward(random_proper_lorentz(rng, 4), omega);
    double const scale
        = std::max({1.0, qa, quantities_AB(image).A});
    double const residual
        = std::abs(pfaffian(image) - pfaffian(omega)) / scale;
    bool consistent = true;
    if (in_light_cone(image, options.tol))
    {
        OrbitClass const moved = orbit_class(image, options.tol);
        bool const near_band
            = std::abs(pfaffian(omega)) <= 100 * options.tol.abs_tol * scale;
        consistent = moved.kind == a.cls->kind || near_band;
    }
    else
    {
        consistent = false;
    }
    j["diagnostics"] = {{"reconstruction_residual", reconstruction},
                        {"classification_residual", residual},
                        {"classification_consistent", consistent}};
    double const limit = violation_threshold(options.tol);
    a.violation = reconstruction > limit || residual > limit || !consistent;
    return a;
}

void add_canonical(Analysis& a, Bivector const& omega, Options const& options)
{
    a.report["canonical"]["witness"]
        = matrix_row_major(a.cf->witness_matrix().matrix());
    if (!a.cls->is_neutral())
    {
        a.report["representative"] = nullptr;
        a.report["note"]
            = "degenerate orbit: no element of the form r0 (w12 + eps w34)";
        return;
    }
    auto const rep = canonical_representative(omega, options.tol);
    a.report["representative"] = {{"point", reals(rep.point.c)},
                                  {"witness", matrix_row_major(rep.witness.matrix())},
                                  {"r0", rep.r0},
                                  {"epsilon", rep.epsilon},
                                  {"theta", rep.theta},
                                  {"t", rep.rapidity}};
    double const residual
        = (pushforward(rep.witness, omega) - rep.point).norm() / a.cf->r;
    a.report["diagnostics"]["representative_residual"] = residual;
    if (residual > violation_threshold(options.tol))
        a.violation = true;
}

void add_slice(Analysis& a, InputRecord const& record, Options const& options)
{
    double const r = *options.r;
    Json s{{"r_queried", r}};
    SliceCertificate const cert = slice_topology(*a.cls, r, options.tol);
    s["topology"] = to_string(cert.topology);
    s["boundary"] = cert.boundary;
    s["member"] = slice_membership(record.omega, r, options.tol);
    if (options.samples > 0)
    {
        std::uint64_t const seed
            = SplitMix64(options.seed).split(record.index)();
        s["empirical_min_radius"] = empirical_min_radius(
            record.omega, options.samples, seed, options.tol);
    }
    a.report["slice"] = s;
}

void add_stabilizer(Analysis& a, InputRecord const& record,
                    Options const& options)
{
    using SF = StabilizerFamily;
    Bivector const& omega = record.omega;
    // Conjugating by the reduction moves the canonical stabilizer to omega.
    LorentzMatrix to_base;
    StabilizerBase base;
    if (a.cls->is_neutral())
    {
        auto const rep = canonical_representative(omega, options.tol);
        to_base = rep.witness;
        base = StabilizerBase::neutral(rep.r0, rep.epsilon);
    }
    else
    {
        to_base = a.cf->witness_matrix().inverse();
        base = StabilizerBase::degenerate_orbit();
    }
    LorentzMatrix const from_base = to_base.inverse();
    double const norm = std::max(1.0, omega.norm());

    std::vector<SF> const families
        = base.degenerate ? std::vector<SF>{SF::u, SF::v}
                          : std::vector<SF>{SF::rot12, SF::boost34,
                                            SF::neg_boost34};
    Json list = Json::array();
    double worst = 0;
    for (SF f : families)
    {
        double residual = 0;
        for (double p : kParameters)
        {
            StabilizerElement const e
                = base.degenerate
                      ? stabilizer_generator_degenerate(f, p)
                      : stabilizer_generator_neutral(f, p, base.r,
                                                     base.epsilon);
            LorentzMatrix const g = from_base * e.matrix * to_base;
            residual = std::max(residual,
                                (pushforward(g, omega) - omega).norm() / norm);
        }
        worst = std::max(worst, residual);
        list.push_back({{"family", to_string(f)},
                        {"max_fixing_residual", residual}});
    }
    Json s{{"base", base.degenerate ? "degenerate" : "neutral"},
           {"families", list}};

    ToleranceConfig const& tol = options.tol;
    if (!base.degenerate)
    {
        auto const wp = w_plus_basis();
        auto const wm = w_minus_basis();
        Json subspaces;
        for (auto [key, policy] :
             {std::pair{"include_neg_boost34", NegationPolicy::include},
              std::pair{"exclude_neg_boost34", NegationPolicy::exclude}})
        {
            std::vector<Bivector> const p{wp[0], wp[1]};
            std::vector<Bivector> const m{wm[0], wm[1]};
            subspaces[key] = {
                {"WPlus", to_string(classify_invariant_subspace(base, p, tol,
                                                                policy))},
                {"WMinus", to_string(classify_invariant_subspace(base, m, tol,
                                                                 policy))}};
        }
        s["invariant_subspaces"] = subspaces;
    }
    else
    {
        auto const w0 = w0_basis();
        std::vector<Bivector> const v{w0[0], w0[1]};
        s["invariant_subspaces"]
            = {{"W0", to_string(classify_invariant_subspace(base, v, tol))}};
    }
    a.report["stabilizer"] = s;
    if (worst > violation_threshold(tol))
        a.violation = true;
}

std::string fmt(Json const& v)
{
    if (v.is_null())
        return "-";
    if (v.is_number_float())
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.10g", v.get<double>());
        return buf;
    }
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

std::string pad(std::string s, std::size_t width)
{
    if (s.size() < width)
        s.append(width - s.size(), ' ');
    return s + ' ';
}

}  // namespace

Outcome process(InputRecord const& record, Options const& options)
{
    Outcome out;
    if (!record.ok())
    {
        out.report = {{"index", record.index},
                      {"id", id_of(record)},
                      {"error", record.error}};
        out.status = exit_input_error;
        return out;
    }
    try
    {
        Analysis a = analyze(record, options);
        if (a.cls)
        {
            switch (options.command)
            {
                case Command::canonical:
                    add_canonical(a, record.omega, options);
                    break;
                case Command::slice:
                    add_slice(a, record, options);
                    break;
                case Command::stabilizer:
                    add_stabilizer(a, record, options);
                    break;
                case Command::classify:
                    break;
            }
        }
        else if (options.command == Command::slice)
        {
            a.report["slice"] = nullptr;
        }
        out.report = std::move(a.report);
        if (a.violation)
        {
            out.report["invariant_violation"] = true;
            out.status = exit_invariant_violation;
        }
    }
    catch (InvariantViolation const& e)
    {
        out.report = {{"index", record.index},
                      {"id", id_of(record)},
                      {"error", e.what()},
                      {"invariant_violation", true}};
        out.status = exit_invariant_violation;
    }
    return out;
}

std::string table_header(Command command)
{
    std::string h = pad("index", 6) + pad("id", 12) + pad("kind", 14)
                    + pad("r0", 18) + pad("r", 18) + pad("phi", 18);
    switch (command)
    {
        case Command::slice: h += "topology"; break;
        case Command::stabilizer: h += "families"; break;
        case Command::canonical: h += "representative"; break;
        case Command::classify: h += "pfaffian"; break;
    }
    return h;
}

std::string table_row(Json const& report, Command command)
{
    std::string row = pad(fmt(report["index"]), 6) + pad(fmt(report["id"]), 12);
    if (report.contains("error"))
        return row + "ERROR " + report["error"].get<std::string>();
    Json const& cls = report["class"];
    Json const& can = report["canonical"];
    row += pad(cls.is_null() ? "off-cone" : fmt(cls["kind"]), 14);
    row += pad(cls.is_null() ? "-" : fmt(cls["r0"]), 18);
    row += pad(can.is_null() ? "-" : fmt(can["r"]), 18);
    row += pad(can.is_null() ? "-" : fmt(can["phi"]), 18);
    switch (command)
    {
        case Command::slice:
            if (report["slice"].is_null())
            {
                row += "-";
            }
            else
            {
                row += fmt(report["slice"]["topology"]);
                if (report["slice"]["boundary"].get<bool>())
                    row += " (boundary)";
            }
            break;
        case Command::stabilizer:
            if (!report.contains("stabilizer"))
            {
                row += "-";
                break;
            }
            for (auto const& f : report["stabilizer"]["families"])
                row += fmt(f["family"]) + "=" + fmt(f["max_fixing_residual"]) + " ";
            break;
        case Command::canonical:
            if (report.contains("representative")
                && !report["representative"].is_null())
            {
                auto const& p = report["representative"]["point"];
                row += fmt(report["representative"]["r0"]) + "*(w12"
                       + (p[5].get<double>() < 0 ? " - " : " + ") + "w34)";
            }
            else
            {
                row += "-";
            }
            break;
        case Command::classify:
            row += fmt(report["pfaffian"]);
            break;
    }
    while (!row.empty() && row.back() == ' ')
        row.pop_back();
    return row;
}

}  // namespace lbo::cli
