#include "padicspec/report_json.hpp"

namespace padicspec {

using nlohmann::ordered_json;

ordered_json json_int(const mpz_class& x) {
    if (x.fits_ulong_p()) return static_cast<std::uint64_t>(x.get_ui());
    if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
    return x.get_str();
}

ordered_json witness_json(const ReducibleWitness& w) {
    ordered_json j;
    j["kind"] = w.kind;
    if (w.residue) {
        j["residue"] = json_int(*w.residue);
        j["precision"] = w.precision;
        return j;
    }
    if (w.kind == "factor") {
        if (!w.factor.empty())
            j["factor"] = w.factor;
        else
            j["note"] = w.value;
        return j;
    }
    j["value"] = w.value;
    return j;
}

namespace {

ordered_json factor_item(const FiberFactor& ff) {
    ordered_json j;
    if (ff.root)
        j["root"] = json_int(*ff.root);
    else
        j["factor"] = ff.factor.to_string();
    j["multiplicity"] = ff.multiplicity;
    return j;
}

ordered_json verdict_json(const FiberBehavior& b) {
    ordered_json j;
    switch (b.verdict) {
    case FiberVerdict::Blip:
        j["kind"] = "blip";
        j["residue_order"] = json_int(b.residue_order);
        return j;
    case FiberVerdict::Split: {
        j["kind"] = "split";
        ordered_json fs = ordered_json::array();
        for (const auto& ff : b.factors) fs.push_back(factor_item(ff));
        j["factors"] = std::move(fs);
        return j;
    }
    case FiberVerdict::Tangent: {
        j["kind"] = "tangent";
        j["factor"] = b.repeated->to_string();
        unsigned mult = 2;
        for (const auto& ff : b.factors)
            if (ff.factor == *b.repeated) {
                mult = ff.multiplicity;
                if (ff.root) j["root"] = json_int(*ff.root);
            }
        j["multiplicity"] = mult;
        if (b.factors.size() > 1) {
            ordered_json fs = ordered_json::array();
            for (const auto& ff : b.factors) fs.push_back(factor_item(ff));
            j["factors"] = std::move(fs);
        }
        return j;
    }
    case FiberVerdict::ContainedInFiber:
        j["kind"] = "contained-in-fiber";
        return j;
    }
    return j;
}

ordered_json generic_json(const GenericRow& g) {
    ordered_json j;
    switch (g.verdict) {
    case QpVerdict::Irreducible:
        j["verdict"] = "irreducible";
        j["certificate"] = g.certificate;
        break;
    case QpVerdict::Reducible:
        j["verdict"] = "reducible";
        j["witness"] = witness_json(*g.witness);
        break;
    case QpVerdict::Undecided:
        j["verdict"] = "undecided";
        j["note"] = g.note;
        break;
    }
    if (g.at_prime) j["at_prime"] = *g.at_prime;
    return j;
}

} // namespace

ordered_json fiber_report_json(const FiberReport& rep) {
    ordered_json j;
    j["anchor"] = rep.anchor.to_string();
    ordered_json space;
    if (rep.global) {
        space["kind"] = "Z";
        ordered_json ps = ordered_json::array();
        for (const Prime& p : rep.primes) ps.push_back(p.value());
        space["primes"] = std::move(ps);
    } else {
        space["kind"] = "Zp";
        space["p"] = rep.primes.at(0).value();
    }
    j["space"] = std::move(space);
    ordered_json rows = ordered_json::array();
    for (const auto& b : rep.rows) {
        ordered_json row;
        row["fiber"] = b.fiber.value();
        row["verdict"] = verdict_json(b);
        if (b.verdict != FiberVerdict::ContainedInFiber && b.degree_drop > 0)
            row["degree_drop"] = b.degree_drop;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["generic"] = generic_json(rep.generic);
    return j;
}

ordered_json spec_point_json(const SpecPoint& pt) {
    ordered_json j;
    switch (pt.kind) {
    case PointKind::GenericPoint:
        j["kind"] = "generic";
        break;
    case PointKind::SpecialFiberGeneric:
        j["kind"] = "special-fiber-generic";
        break;
    case PointKind::HorizontalPrime:
        j["kind"] = "horizontal";
        break;
    case PointKind::ClosedPoint:
        j["kind"] = "closed";
        break;
    }
    if (pt.p) j["p"] = pt.p->value();
    if (pt.horizontal) j["generator"] = pt.horizontal->to_string();
    if (pt.closed) j["poly"] = pt.closed->to_string();
    if (!pt.certificate.empty()) j["certificate"] = pt.certificate;
    return j;
}

ordered_json residue_json(const ResidueDescriptor& r) {
    ordered_json j;
    switch (r.kind) {
    case ResidueKind::FiniteField:
        j["kind"] = "finite-field";
        j["order"] = json_int(r.order);
        j["degree"] = r.degree;
        break;
    case ResidueKind::LocalFieldExtension:
        j["kind"] = "local-field-extension";
        j["degree"] = r.degree;
        break;
    case ResidueKind::NonDomain:
        j["kind"] = "non-domain";
        j["witness"] = r.text;
        break;
    case ResidueKind::RationalFunction:
        j["kind"] = "rational-function-field";
        j["field"] = r.text;
        break;
    }
    return j;
}

ordered_json classify_json(const ClassifyResult& c) {
    ordered_json j;
    switch (c.status) {
    case ClassifyStatus::PrimeIdeal:
        j["status"] = "prime";
        break;
    case ClassifyStatus::NotPrime:
        j["status"] = "not-prime";
        break;
    case ClassifyStatus::Undecided:
        j["status"] = "undecided";
        break;
    }
    if (c.point) j["point"] = spec_point_json(*c.point);
    if (c.residue) j["residue"] = residue_json(*c.residue);
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

} // namespace padicspec
