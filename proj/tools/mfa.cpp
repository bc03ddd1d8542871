// mfa — exact multi-fan analyzer.
//
// Reads fan documents (JSON), computes volume polynomials, duality-algebra
// dimension vectors, Hilbert functions, annihilators and editability, applies
// bistellar moves, and estimates the r invariant of singular pseudomanifolds.
// All arithmetic is exact rational; every randomized step is seeded.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <multifan/all.hpp>

namespace {

using namespace multifan;
using nlohmann::json;

struct Common {
    std::string file;
    std::string file_b;  // second input for join/csum
    std::optional<std::uint64_t> seed;
    bool json_mode = false;
    std::string out;
};

std::uint64_t resolve_seed(const Common& c, const FanDocument& doc)
{
    if (c.seed) return *c.seed;
    if (doc.seed) return *doc.seed;
    if (const char* env = std::getenv("MULTIFAN_SEED")) {
        try {
            return static_cast<std::uint64_t>(std::stoull(env));
        } catch (const std::exception&) {
            raise(errc::invalid_input, "MULTIFAN_SEED is not an integer");
        }
    }
    return kDefaultSeed;
}

std::uint64_t resolve_seed(const Common& c)
{
    FanDocument empty{MultiFan(SimplicialChain(0, 0), CharacteristicFunction(0, {})),
                      std::nullopt, std::nullopt};
    return resolve_seed(c, empty);
}

void emit(const Common& c, const std::string& text)
{
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f) raise(errc::invalid_input, "cannot write file: " + c.out);
    f << text;
}

void emit_fan(const Common& c, const MultiFan& fan)
{
    if (c.json_mode && c.out.empty()) {
        std::cout << fan_to_json(fan).dump(2) << "\n";
        return;
    }
    FanDocument doc{fan, std::nullopt, std::nullopt};
    if (c.out.empty())
        std::cout << document_to_string(doc);
    else
        save_document(doc, c.out);
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            raise(errc::invalid_input, what + ": expected comma-separated integers");
        }
    }
    if (out.empty()) raise(errc::invalid_input, what + " is empty");
    return out;
}

RationalVector parse_rational_list(const std::string& s, const std::string& what)
{
    RationalVector out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) raise(errc::invalid_input, what + " is empty");
    return out;
}

json dvector_json(const DVector& d) { return json(d.d); }

std::string vertices_str(const std::vector<int>& vs)
{
    if (vs.empty()) return "(none)";
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(vs[i]);
    }
    return out;
}

// ---------------------------------------------------------------- commands

int cmd_validate(const Common& c)
{
    const FanDocument doc = load_document(c.file);
    const auto& fan = doc.fan;
    const auto report = singularity_report(fan.cycle());
    std::vector<int> ghosts;
    for (int v = 1; v <= fan.m(); ++v)
        if (fan.cycle().is_ghost(v)) ghosts.push_back(v);

    if (c.json_mode) {
        json j;
        j["valid"] = true;
        j["n"] = fan.n();
        j["m"] = fan.m();
        j["facets"] = fan.cycle().weights().size();
        j["ghost"] = ghosts;
        j["smooth"] = report.smooth;
        j["singular"] = report.singular;
        j["adjacent_singular_pairs"] = json::array();
        for (auto& [a, b] : report.adjacent_singular_pairs)
            j["adjacent_singular_pairs"].push_back({a, b});
        emit(c, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream out;
    out << "valid\n";
    out << "n: " << fan.n() << "  m: " << fan.m()
        << "  facets: " << fan.cycle().weights().size() << "\n";
    out << "ghost vertices: " << vertices_str(ghosts) << "\n";
    out << "smooth vertices: " << vertices_str(report.smooth) << "\n";
    out << "singular vertices: " << vertices_str(report.singular) << "\n";
    for (auto& [a, b] : report.adjacent_singular_pairs)
        out << "warning: singular vertices " << a << " and " << b
            << " share a simplex\n";
    emit(c, out.str());
    return 0;
}

int cmd_volpoly(const Common& c)
{
    const FanDocument doc = load_document(c.file);
    const SparsePolynomial V =
        volume_polynomial(doc.fan, doc.polarization, resolve_seed(c, doc));
    if (c.json_mode) {
        json j;
        j["n"] = doc.fan.n();
        j["m"] = doc.fan.m();
        j["volume_polynomial"] = V.str();
        emit(c, j.dump(2) + "\n");
    } else {
        emit(c, V.str() + "\n");
    }
    return 0;
}

int cmd_dvector(const Common& c)
{
    const FanDocument doc = load_document(c.file);
    AlgebraOptions opts;
    opts.seed = resolve_seed(c, doc);
    const DVector d = d_vector(doc.fan, opts);
    if (c.json_mode)
        emit(c, json{{"d", dvector_json(d)}}.dump(2) + "\n");
    else
        emit(c, d.str() + "\n");
    return 0;
}

int cmd_hilbert(const Common& c)
{
    const FanDocument doc = load_document(c.file);
    AlgebraOptions opts;
    opts.seed = resolve_seed(c, doc);
    const HilbertFunction h = hilbert(doc.fan, opts);
    if (c.json_mode)
        emit(c, json{{"d", dvector_json(h.d)}, {"hilbert", h.str()}}.dump(2) + "\n");
    else
        emit(c, h.str() + "\n");
    return 0;
}

int cmd_ann(const Common& c, int degree)
{
    const FanDocument doc = load_document(c.file);
    AlgebraOptions opts;
    opts.seed = resolve_seed(c, doc);
    const auto basis = annihilator_basis(doc.fan, degree, opts);
    if (c.json_mode) {
        json j;
        j["degree"] = degree;
        j["count"] = basis.size();
        j["basis"] = json::array();
        for (const auto& op : basis) j["basis"].push_back(op.str("d"));
        emit(c, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream out;
    out << basis.size() << " operator(s) of degree " << degree
        << " annihilating the volume polynomial\n";
    for (const auto& op : basis) out << op.str("d") << "\n";
    emit(c, out.str());
    return 0;
}

int cmd_editable(const Common& c)
{
    const FanDocument doc = load_document(c.file);
    AlgebraOptions opts;
    opts.seed = resolve_seed(c, doc);
    const EditabilityReport report = is_editable(doc.fan, opts);
    if (c.json_mode) {
        json j;
        j["editable"] = report.editable;
        j["degrees"] = json::array();
        for (const auto& deg : report.degrees)
            j["degrees"].push_back(
                {{"j", deg.j}, {"image", deg.dim_image}, {"kernel", deg.dim_kernel}});
        emit(c, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream out;
    out << (report.editable ? "editable" : "not editable") << "\n";
    for (const auto& deg : report.degrees)
        out << "degree " << 2 * deg.j << ": image " << deg.dim_image << ", kernel "
            << deg.dim_kernel << "\n";
    emit(c, out.str());
    return 0;
}

int cmd_project(const Common& c, const std::string& face)
{
    const FanDocument doc = load_document(c.file);
    emit_fan(c, project(doc.fan, parse_int_list(face, "--face")));
    return 0;
}

int cmd_join(const Common& c)
{
    const FanDocument a = load_document(c.file);
    const FanDocument b = load_document(c.file_b);
    emit_fan(c, join(a.fan, b.fan));
    return 0;
}

int cmd_csum(const Common& c, const std::string& identify)
{
    const FanDocument a = load_document(c.file);
    const FanDocument b = load_document(c.file_b);
    std::vector<std::pair<int, int>> pairs;
    std::stringstream ss(identify);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            raise(errc::invalid_input, "--identify needs entries of the form A:B");
        try {
            pairs.emplace_back(std::stoi(item.substr(0, colon)),
                               std::stoi(item.substr(colon + 1)));
        } catch (const std::exception&) {
            raise(errc::invalid_input, "--identify needs integer vertex indices");
        }
    }
    emit_fan(c, connected_sum(a.fan, b.fan, pairs));
    return 0;
}

int cmd_suspend(const Common& c, const std::string& apices)
{
    const FanDocument doc = load_document(c.file);
    ApexPreset preset;
    if (apices == "collinear")
        preset = ApexPreset::collinear;
    else if (apices == "independent")
        preset = ApexPreset::independent;
    else
        raise(errc::invalid_input, "--apices must be collinear or independent");
    emit_fan(c, suspend_fan(doc.fan, preset));
    return 0;
}

MoveSpec build_move_spec(const std::string& kind, const std::string& target,
                         std::optional<int> vertex)
{
    const auto k = parse_int_list(kind, "--kind");
    if (k.size() != 2) raise(errc::invalid_input, "--kind must be two integers i,j");
    MoveSpec spec;
    spec.kind = {k[0], k[1]};
    spec.target = parse_int_list(target, "--target");
    spec.new_vertex = vertex;
    return spec;
}

int cmd_move(const Common& c, const std::string& kind, const std::string& target,
             std::optional<int> vertex, const std::string& value, bool suspended)
{
    const FanDocument doc = load_document(c.file);
    const MoveSpec spec = build_move_spec(kind, target, vertex);
    std::optional<RationalVector> new_lambda;
    if (!value.empty()) new_lambda = parse_rational_list(value, "--value");
    const std::uint64_t seed = resolve_seed(c, doc);
    const MultiFan moved = suspended
                               ? suspended_move(doc.fan, spec, new_lambda, seed)
                               : apply_move(doc.fan, spec, new_lambda, seed);
    emit_fan(c, moved);
    return 0;
}

int cmd_shuffle(const Common& c, int count)
{
    const FanDocument doc = load_document(c.file);
    const auto result = random_moves(doc.fan, count, resolve_seed(c, doc));
    json log = json::array();
    for (const auto& spec : result.applied) {
        json entry;
        entry["kind"] = {spec.kind.first, spec.kind.second};
        entry["target"] = spec.target;
        if (spec.new_vertex) entry["new_vertex"] = *spec.new_vertex;
        log.push_back(std::move(entry));
    }
    if (c.json_mode && c.out.empty()) {
        json j;
        j["applied"] = log;
        j["fan"] = fan_to_json(result.fan);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (!c.out.empty()) {
        save_document(FanDocument{result.fan, std::nullopt, std::nullopt}, c.out);
        std::cout << "applied " << result.applied.size() << " move(s):\n";
        for (const auto& spec : result.applied) std::cout << spec.str() << "\n";
        return 0;
    }
    std::cout << "applied " << result.applied.size() << " move(s):\n";
    for (const auto& spec : result.applied) std::cout << spec.str() << "\n";
    std::cout << document_to_string(FanDocument{result.fan, std::nullopt, std::nullopt});
    return 0;
}

int cmd_rx(const Common& c, int samples, bool strict)
{
    const FanDocument doc = load_document(c.file);
    RxOptions opts;
    opts.samples_per_stratum = samples;
    opts.seed = resolve_seed(c, doc);
    opts.strict = strict;
    const RxReport report = r_invariant(doc.fan.cycle(), opts);

    if (c.json_mode) {
        json j;
        j["singular"] = report.singularities.singular;
        j["samples_per_stratum"] = report.samples_per_stratum;
        j["seed"] = report.seed;
        j["strata"] = json::array();
        for (const auto& sr : report.strata) {
            json s;
            s["classes"] = sr.spec.classes;
            s["rank"] = sr.spec.rank;
            s["agreement"] = sr.agreement;
            s["samples"] = json::array();
            for (const auto& d : sr.samples) s["samples"].push_back(dvector_json(d));
            j["strata"].push_back(std::move(s));
        }
        j["distinct"] = json::array();
        for (const auto& d : report.distinct) j["distinct"].push_back(dvector_json(d));
        j["r"] = report.r;
        emit(c, j.dump(2) + "\n");
        return 0;
    }

    std::ostringstream out;
    out << "singular vertices: " << vertices_str(report.singularities.singular)
        << "\n";
    for (auto& [a, b] : report.singularities.adjacent_singular_pairs)
        out << "warning: singular vertices " << a << " and " << b
            << " share a simplex\n";
    out << "strata: " << report.strata.size() << "\n";
    for (const auto& sr : report.strata) {
        out << "  " << sr.spec.str() << ": ";
        if (sr.agreement)
            out << "d = " << sr.samples.front().str() << "  (" << sr.samples.size()
                << " samples agree)\n";
        else {
            out << "samples disagree:";
            for (const auto& d : sr.samples) out << " " << d.str();
            out << "\n";
        }
    }
    out << "r = " << report.r << "\n";
    emit(c, out.str());
    return 0;
}

int cmd_catalog(const Common& c, const std::string& name)
{
    const auto entries = catalog();
    if (name.empty()) {
        std::ostringstream out;
        for (const auto& e : entries) out << e.name << " - " << e.summary << "\n";
        emit(c, out.str());
        return 0;
    }
    emit_fan(c, catalog_fan(entries, name));
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"mfa: exact computations with complete simplicial multi-fans"};
    app.require_subcommand(1);

    Common c;
    int ann_degree = 1;
    std::string face, identify, apices = "independent";
    std::string move_kind, move_target, move_value, catalog_name;
    std::optional<int> move_vertex;
    bool move_suspended = false, rx_strict = false;
    int shuffle_count = 1, rx_samples = 3;

    const auto add_common = [&](CLI::App* sub, bool needs_file = true) {
        if (needs_file) sub->add_option("file", c.file, "fan document")->required();
        sub->add_option("--seed", c.seed, "seed for randomized steps");
        sub->add_flag("--json", c.json_mode, "machine-readable output");
        sub->add_option("--out", c.out, "write output to a file");
    };

    auto* validate = app.add_subcommand("validate", "check a fan document");
    add_common(validate);
    auto* volpoly = app.add_subcommand("volpoly", "volume polynomial");
    add_common(volpoly);
    auto* dvector = app.add_subcommand("dvector", "duality-algebra dimensions");
    add_common(dvector);
    auto* hilbertc = app.add_subcommand("hilbert", "Hilbert function");
    add_common(hilbertc);
    auto* ann = app.add_subcommand("ann", "annihilator basis in one degree");
    add_common(ann);
    ann->add_option("--degree", ann_degree, "operator degree")->required();
    auto* editable = app.add_subcommand("editable", "suspension editability report");
    add_common(editable);
    auto* projectc = app.add_subcommand("project", "project onto a face's link");
    add_common(projectc);
    projectc->add_option("--face", face, "comma-separated vertices")->required();
    auto* joinc = app.add_subcommand("join", "join of two fans");
    joinc->add_option("a", c.file, "first fan document")->required();
    joinc->add_option("b", c.file_b, "second fan document")->required();
    add_common(joinc, false);
    auto* csum = app.add_subcommand("csum", "connected sum of two fans");
    csum->add_option("a", c.file, "first fan document")->required();
    csum->add_option("b", c.file_b, "second fan document")->required();
    csum->add_option("--identify", identify, "vertex pairs A:B to glue")->required();
    add_common(csum, false);
    auto* suspend = app.add_subcommand("suspend", "suspension with marked apices");
    add_common(suspend);
    suspend->add_option("--apices", apices, "collinear or independent");
    auto* movec = app.add_subcommand("move", "apply one bistellar move");
    add_common(movec);
    movec->add_option("--kind", move_kind, "move kind i,j")->required();
    movec->add_option("--target", move_target, "target simplex")->required();
    movec->add_option("--vertex", move_vertex, "vertex to insert");
    movec->add_option("--value", move_value, "coloring value for the inserted vertex");
    movec->add_flag("--suspended", move_suspended,
                    "treat as a base move on a suspension");
    auto* shuffle = app.add_subcommand("shuffle", "apply random bistellar moves");
    add_common(shuffle);
    shuffle->add_option("--count", shuffle_count, "number of moves");
    auto* rx = app.add_subcommand("rx", "estimate the r invariant by strata");
    add_common(rx);
    rx->add_option("--samples", rx_samples, "samples per stratum");
    rx->add_flag("--strict", rx_strict, "fail when samples inside a stratum differ");
    auto* catalogc = app.add_subcommand("catalog", "list or export built-in fans");
    catalogc->add_option("name", catalog_name, "entry name (omit to list)");
    add_common(catalogc, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(c);
        if (volpoly->parsed()) return cmd_volpoly(c);
        if (dvector->parsed()) return cmd_dvector(c);
        if (hilbertc->parsed()) return cmd_hilbert(c);
        if (ann->parsed()) return cmd_ann(c, ann_degree);
        if (editable->parsed()) return cmd_editable(c);
        if (projectc->parsed()) return cmd_project(c, face);
        if (joinc->parsed()) return cmd_join(c);
        if (csum->parsed()) return cmd_csum(c, identify);
        if (suspend->parsed()) return cmd_suspend(c, apices);
        if (movec->parsed())
            return cmd_move(c, move_kind, move_target, move_vertex, move_value,
                            move_suspended);
        if (shuffle->parsed()) return cmd_shuffle(c, shuffle_count);
        if (rx->parsed()) return cmd_rx(c, rx_samples, rx_strict);
        if (catalogc->parsed()) return cmd_catalog(c, catalog_name);
    } catch (const FanError& e) {
        if (c.json_mode)
            std::cerr << error_to_json(e).dump(2) << "\n";
        else
            std::cerr << "error [" << errc_name(e.code()) << "]: " << e.message()
                      << "\n";
        return errc_is_internal(e.code()) ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
