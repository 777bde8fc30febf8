#include "ktoric/fanio.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ktoric {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void schema_error(const std::string& what)
{
    throw FanIoError("fan file schema: " + what);
}

long long require_int(const ordered_json& j, const std::string& where)
{
    if (!j.is_number_integer())
        schema_error(where + " must be an integer");
    return j.get<long long>();
}

}  // namespace

FanFile parse_fan_json(const std::string& text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw FanIoError(std::string("fan file is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        schema_error("top level must be an object");
    if (!j.contains("format") || require_int(j["format"], "format") != 1)
        schema_error("missing or unsupported \"format\" (expected 1)");
    FanFile f;
    f.name = j.value("name", std::string());
    if (!j.contains("lattice") || !j["lattice"].is_object())
        schema_error("missing \"lattice\" object");
    const auto& lat = j["lattice"];
    f.fan.lattice.free_rank = static_cast<int>(require_int(lat.at("rank"), "lattice.rank"));
    if (lat.contains("torsion")) {
        if (!lat["torsion"].is_array())
            schema_error("lattice.torsion must be an array");
        for (const auto& d : lat["torsion"])
            f.fan.lattice.torsion_invariants.emplace_back(
                require_int(d, "lattice.torsion entry"));
    }
    if (!j.contains("rays") || !j["rays"].is_array())
        schema_error("missing \"rays\" array");
    for (const auto& r : j["rays"]) {
        if (!r.is_object() || !r.contains("free") || !r["free"].is_array())
            schema_error("each ray needs a \"free\" coordinate array");
        LatticeElement e;
        for (const auto& c : r["free"])
            e.free_part.emplace_back(require_int(c, "ray free coordinate"));
        if (r.contains("torsion")) {
            if (!r["torsion"].is_array())
                schema_error("ray torsion must be an array");
            for (const auto& c : r["torsion"])
                e.torsion_part.emplace_back(require_int(c, "ray torsion residue"));
        }
        if (e.torsion_part.size() != f.fan.lattice.torsion_invariants.size())
            schema_error("ray torsion residue count does not match the lattice");
        f.fan.rays.push_back(std::move(e));
    }
    if (!j.contains("max_cones") || !j["max_cones"].is_array())
        schema_error("missing \"max_cones\" array");
    for (const auto& c : j["max_cones"]) {
        if (!c.is_array())
            schema_error("each cone must be an array of ray indices");
        std::vector<int> cone;
        for (const auto& v : c)
            cone.push_back(static_cast<int>(require_int(v, "cone ray index")));
        f.fan.max_cones.push_back(std::move(cone));
    }
    return f;
}

std::string serialize_fan_json(const FanFile& file)
{
    ordered_json j;
    j["format"] = 1;
    j["name"] = file.name;
    j["lattice"]["rank"] = file.fan.lattice.free_rank;
    j["lattice"]["torsion"] = ordered_json::array();
    for (const auto& d : file.fan.lattice.torsion_invariants)
        j["lattice"]["torsion"].push_back(d.convert_to<long long>());
    j["rays"] = ordered_json::array();
    for (const auto& r : file.fan.rays) {
        ordered_json ray;
        ray["free"] = ordered_json::array();
        for (const auto& c : r.free_part)
            ray["free"].push_back(c.convert_to<long long>());
        ray["torsion"] = ordered_json::array();
        for (const auto& c : r.torsion_part)
            ray["torsion"].push_back(c.convert_to<long long>());
        j["rays"].push_back(std::move(ray));
    }
    j["max_cones"] = file.fan.max_cones;
    return j.dump(2) + "\n";
}

bool fan_is_valid(const FanFile& file)
{
    return validate(file.fan).valid;
}

namespace {

std::vector<long long> cm_primes(const ReportOptions& opts, const StackyFan& reduced,
                                 bool simplicial)
{
    if (!opts.primes.empty())
        return opts.primes;
    std::set<long long> ps = {2, 3, 5, 7};
    if (simplicial)
        for (const auto& cone : reduced.max_cones) {
            long long m = multiplicity(reduced, cone).convert_to<long long>();
            for (long long p = 2; p * p <= m; ++p)
                while (m % p == 0) {
                    ps.insert(p);
                    m /= p;
                }
            if (m > 1)
                ps.insert(m);
        }
    return {ps.begin(), ps.end()};
}

ordered_json build_report(const FanFile& file, const ReportOptions& opts)
{
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t0) {
        return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0)
            .count();
    };
    ordered_json rep;
    rep["format"] = 1;
    rep["name"] = file.name;

    auto t_validate = clock::now();
    FanDiagnostics d = validate(file.fan);
    ordered_json val;
    val["valid"] = d.valid;
    val["simplicial"] = d.simplicial;
    val["fan_axiom"] = d.fan_axiom;
    val["fan_axiom_checked"] = d.fan_axiom_checked;
    val["complete"] = d.complete;
    val["messages"] = d.messages;
    rep["validation"] = std::move(val);
    long long validate_ms = ms_since(t_validate);

    if (!d.valid) {
        const char* reason = "invalid fan";
        rep["multiplicities"] = {{"skipped", reason}};
        rep["dg_beta"] = {{"skipped", reason}};
        rep["presentation"] = {{"skipped", reason}};
        rep["k0"] = {{"skipped", reason}};
        rep["simplicial"] = {{"skipped", reason}};
        return rep;
    }

    ReducedFan red = reduce_lattice(file.fan);
    if (d.simplicial) {
        ordered_json mults = ordered_json::array();
        for (const auto& cone : red.fan.max_cones)
            mults.push_back(multiplicity(red.fan, cone).convert_to<long long>());
        rep["multiplicities"] = std::move(mults);
    } else {
        rep["multiplicities"] = {{"skipped", "fan is not simplicial"}};
    }

    auto t_k0 = clock::now();
    bool spanning = rank(file.fan.ray_matrix()) == file.fan.lattice.free_rank;
    if (spanning) {
        GaleDual gd = gale_dual(file.fan);
        ordered_json dg;
        dg["rank"] = gd.group.rank;
        dg["torsion"] = ordered_json::array();
        for (const auto& t : gd.group.invariant_factors)
            dg["torsion"].push_back(t.convert_to<long long>());
        dg["beta_vee"] = ordered_json::array();
        for (const auto& row : gd.beta_vee) {
            ordered_json r = ordered_json::array();
            for (const auto& c : row)
                r.push_back(c.convert_to<long long>());
            dg["beta_vee"].push_back(std::move(r));
        }
        rep["dg_beta"] = std::move(dg);
    } else {
        rep["dg_beta"] = {{"skipped", "rays do not span the lattice"}};
    }

    if (!d.simplicial) {
        rep["presentation"] = {{"skipped", "fan is not simplicial"}};
        rep["k0"] = {{"skipped", "fan is not simplicial"}};
    } else {
        KZeroStructure k = k0_structure(file.fan, opts.mode);
        ordered_json pres;
        pres["mode"] = opts.mode == K0Mode::laurent ? "laurent" : "group_ring";
        pres["relations"] = k.presentation.all_relations().size();
        rep["presentation"] = std::move(pres);
        ordered_json k0;
        k0["finite"] = k.finite;
        if (k.finite) {
            k0["rank"] = k.rank->convert_to<long long>();
            k0["invariant_factors"] = ordered_json::array();
            for (const auto& f : k.invariant_factors)
                k0["invariant_factors"].push_back(f.convert_to<long long>());
            k0["free"] = k.free_module;
        } else {
            k0["rank"] = "infinite";
            k0["invariant_factors"] = ordered_json::array();
            k0["free"] = false;
        }
        k0["complete_hypothesis"] = k.complete;
        rep["k0"] = std::move(k0);
    }
    long long k0_ms = ms_since(t_k0);

    auto t_simp = clock::now();
    if (d.simplicial) {
        SimplicialComplex complex = underlying_complex(file.fan);
        ordered_json simp;
        if (!opts.shellability) {
            simp["shellable"] = "skipped";
        } else if (!complex.pure()) {
            simp["shellable"] = "not_applicable";
        } else {
            ShellabilityVerdict v = is_shellable(complex, opts.shell_cap);
            switch (v.status) {
            case ShellabilityVerdict::Status::Shellable:
                simp["shellable"] = "shellable";
                simp["witness"] = v.witness;
                break;
            case ShellabilityVerdict::Status::NotShellable:
                simp["shellable"] = "not_shellable";
                break;
            case ShellabilityVerdict::Status::Undecided:
                simp["shellable"] = "undecided";
                break;
            }
        }
        ordered_json cm;
        cm["Q"] = is_cohen_macaulay(complex, CoeffField::Q());
        for (long long p : cm_primes(opts, red.fan, d.simplicial))
            cm[CoeffField::Fp(p).label()] = is_cohen_macaulay(complex, CoeffField::Fp(p));
        simp["cm"] = std::move(cm);
        rep["simplicial"] = std::move(simp);
    } else {
        rep["simplicial"] = {{"skipped", "fan is not simplicial"}};
    }
    long long simplicial_ms = ms_since(t_simp);

    if (opts.timings) {
        rep["timings"] = {{"validate_ms", validate_ms},
                          {"k0_ms", k0_ms},
                          {"simplicial_ms", simplicial_ms}};
    }
    return rep;
}

}  // namespace

std::string report_json(const FanFile& file, const ReportOptions& opts)
{
    return build_report(file, opts).dump(2) + "\n";
}

std::string report_text(const FanFile& file, const ReportOptions& opts)
{
    ordered_json rep = build_report(file, opts);
    std::ostringstream out;
    out << "fan: " << rep["name"].get<std::string>() << "\n";
    const auto& v = rep["validation"];
    out << "validation: valid=" << v["valid"] << " simplicial=" << v["simplicial"]
        << " fan_axiom=" << v["fan_axiom"] << " complete=" << v["complete"] << "\n";
    for (const auto& m : v["messages"])
        out << "  note: " << m.get<std::string>() << "\n";
    if (rep["multiplicities"].is_array())
        out << "multiplicities: " << rep["multiplicities"].dump() << "\n";
    if (rep["dg_beta"].is_object() && !rep["dg_beta"].contains("skipped")) {
        out << "DG(beta): rank " << rep["dg_beta"]["rank"] << ", torsion "
            << rep["dg_beta"]["torsion"].dump() << "\n";
        out << "beta_vee: " << rep["dg_beta"]["beta_vee"].dump() << "\n";
    }
    if (rep["k0"].is_object() && !rep["k0"].contains("skipped")) {
        const auto& k = rep["k0"];
        out << "K0: ";
        if (k["rank"].is_string()) {
            out << "infinite rank";
        } else {
            out << "rank " << k["rank"] << ", invariant factors "
                << k["invariant_factors"].dump()
                << (k["free"].get<bool>() ? ", free" : ", not free");
        }
        out << " (completeness hypothesis "
            << (k["complete_hypothesis"].get<bool>() ? "met" : "not met") << ")\n";
    }
    if (rep["simplicial"].is_object() && !rep["simplicial"].contains("skipped")) {
        out << "shellable: " << rep["simplicial"]["shellable"].get<std::string>()
            << "\n";
        out << "cohen-macaulay: " << rep["simplicial"]["cm"].dump() << "\n";
    }
    if (rep.contains("timings"))
        out << "timings: " << rep["timings"].dump() << "\n";
    return out.str();
}

}  // namespace ktoric
