// zq: batch front end for the relation checks, bases, characters and rewriting.
#include "zq/fock/actions.hpp"
#include "zq/fock/state.hpp"
#include "zq/verify/checks.hpp"
#include "zq/zalg/algebra.hpp"
#include "zq/zalg/words.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using zq::verify::json;

constexpr const char* kFooter = R"(CSV columns:
  verify     relation,k,sector,coeff,vector,lhs,rhs,equal
  basis      degree,alpha0,state
  character  n,dim
  rewrite    word,coefficient
  catalog    id,suite,levels,sectors,model,description

Output is deterministic; elapsed_ms is null unless --timing is given.
ZQ_THREADS caps the number of worker threads.
Exit codes: 0 success, 1 a relation failed (report path on stderr), 2 bad arguments.)";

struct Options {
    std::string format = "json";
    std::string out;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) {
        if (c == '"') r += '"';
        r += c;
    }
    return r + "\"";
}

// writes to --out or stdout; returns the destination name for messages
std::string emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return "stdout";
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    f << text;
    return o.out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int run_verify(const Options& o, int k, const std::string& suite, const std::vector<std::string>& relations,
               const zq::verify::CheckWindow& window, const std::string& sector, const std::string& model, const std::string& module,
               bool swapped, bool timing) {
    using namespace zq::verify;
    std::vector<RelationSpec> specs;
    if (!suite.empty()) specs = suite_specs(suite, k, window);
    for (const auto& id : relations) {
        const RelationInfo& info = relation_info(id);
        RelationSpec s;
        s.relation = id;
        s.k = k;
        s.window = window;
        s.module = module;
        s.swapped_direction = swapped;
        if (model == "realized") s.model = Model::realized;
        if (model == "abstract") s.model = Model::abstract;
        const bool realized = model == "realized" || (model.empty() && info.default_model == Model::realized);
        if (!sector.empty() || k != 2 || !realized || info.sectors.empty()) {
            s.sector = sector;
            specs.push_back(s);
        } else {
            for (const auto& sec : info.sectors) {
                s.sector = sec;
                specs.push_back(s);
            }
        }
    }
    if (specs.empty()) throw CLI::ValidationError("verify", "give --suite or at least one --relation");
    if (!sector.empty()) {
        for (auto& s : specs) s.sector = sector;
    }

    std::vector<CheckReport> reports;
    bool passed = true;
    std::vector<std::string> failed;
    for (const auto& s : specs) {
        CheckReport r = run_check(s);
        if (!timing) r.elapsed_ms.reset();
        if (!r.passed) failed.push_back(s.relation + (s.sector.empty() ? "" : "/" + s.sector));
        passed = passed && r.passed;
        reports.push_back(std::move(r));
    }

    std::string text;
    if (o.format == "json") {
        if (reports.size() == 1) {
            text = dump(reports.front().to_json());
        } else {
            json doc;
            doc["suite"] = suite.empty() ? json(nullptr) : json(suite);
            doc["k"] = k;
            json items = json::array();
            for (const auto& r : reports) items.push_back(r.to_json());
            doc["reports"] = std::move(items);
            doc["passed"] = passed;
            text = dump(doc);
        }
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "relation,k,sector,coeff,vector,lhs,rhs,equal\n";
        for (const auto& r : reports) {
            for (const auto& e : r.entries) {
                os << r.spec.relation << ',' << r.spec.k << ',' << r.spec.sector << ',' << csv_field(e.coeff.dump()) << ','
                   << csv_field(e.vector) << ',' << csv_field(e.lhs) << ',' << csv_field(e.rhs) << ',' << (e.equal ? "true" : "false")
                   << '\n';
            }
        }
        text = os.str();
    } else {
        std::ostringstream os;
        for (const auto& r : reports) {
            std::size_t bad = 0;
            for (const auto& e : r.entries) bad += e.equal ? 0 : 1;
            os << (r.passed ? "PASS " : "FAIL ") << r.spec.relation << " k=" << r.spec.k;
            if (!r.spec.sector.empty()) os << " sector=" << r.spec.sector;
            if (!r.spec.module.empty()) os << " module=" << r.spec.module;
            os << " entries=" << r.entries.size() << " failed=" << bad;
            if (r.elapsed_ms) os << " ms=" << static_cast<long>(*r.elapsed_ms);
            os << '\n';
            for (const auto& e : r.entries) {
                if (!e.equal) os << "  " << e.coeff.dump() << ' ' << e.vector << ": " << e.lhs << " != " << e.rhs << '\n';
            }
        }
        text = os.str();
    }
    const std::string where = emit(o, text);
    if (!passed) {
        std::cerr << "failed relations:";
        for (const auto& f : failed) std::cerr << ' ' << f;
        std::cerr << "\nreport: " << where << '\n';
        return 1;
    }
    return 0;
}

int run_basis(const Options& o, int k, int floor, const std::string& realization, int max_charge) {
    struct Row {
        std::string degree;
        std::string charge;
        std::string state;
    };
    std::vector<Row> rows;
    if (realization.empty()) {
        for (int d = 0; d >= floor; --d) {
            for (const auto& w : zq::zalg::enumerate_H(d)) rows.push_back({std::to_string(d), std::to_string(zq::zalg::charge(w)), zq::zalg::to_string(w)});
        }
    } else {
        const zq::fock::Realization r = zq::fock::parse_realization(realization);
        const int kk = zq::fock::level(r);
        for (const auto& s : zq::fock::slice_basis(r, {zq::fock::Rational(floor), zq::fock::Rational(0)}, {zq::fock::Rational(-max_charge), zq::fock::Rational(max_charge)})) {
            std::ostringstream deg;
            deg << zq::fock::degree(kk, s);
            rows.push_back({deg.str(), std::to_string(s.lattice.alpha0()), zq::fock::to_string(s)});
        }
    }
    std::ostringstream os;
    if (o.format == "json") {
        json doc;
        doc["space"] = realization.empty() ? "W(M)" : realization;
        if (realization.empty()) doc["k"] = k;
        doc["min_degree"] = floor;
        json items = json::array();
        for (const auto& r : rows) items.push_back(json{{"degree", r.degree}, {"alpha0", r.charge}, {"state", r.state}});
        doc["basis"] = std::move(items);
        os << dump(doc);
    } else if (o.format == "csv") {
        os << "degree,alpha0,state\n";
        for (const auto& r : rows) os << r.degree << ',' << r.charge << ',' << csv_field(r.state) << '\n';
    } else {
        for (const auto& r : rows) os << r.degree << '\t' << r.charge << '\t' << r.state << '\n';
    }
    emit(o, os.str());
    return 0;
}

int run_character(const Options& o, const std::string& which, int n) {
    const auto kind = which == "W" ? zq::zalg::CharacterKind::W : zq::zalg::CharacterKind::G;
    std::ostringstream os;
    if (o.format == "json") {
        json dims = json::array();
        for (int i = 0; i <= n; ++i) dims.push_back(zq::zalg::character(kind, i));
        os << dump(json{{"which", which}, {"n", n}, {"dims", dims}});
    } else if (o.format == "csv") {
        os << "n,dim\n";
        for (int i = 0; i <= n; ++i) os << i << ',' << zq::zalg::character(kind, i) << '\n';
    } else {
        for (int i = 0; i <= n; ++i) os << i << '\t' << zq::zalg::character(kind, i) << '\n';
    }
    emit(o, os.str());
    return 0;
}

int run_rewrite(const Options& o, int k, int floor, const std::string& word, const std::string& strategy) {
    const zq::zalg::ZWord w = zq::zalg::parse_word(word);
    const auto st = strategy == "leftmost" ? zq::zalg::Strategy::leftmost : zq::zalg::Strategy::rightmost;
    const zq::zalg::ZVector v = zq::zalg::z_algebra(k).normal_order(w, floor, st);
    std::ostringstream os;
    if (o.format == "json") {
        json terms = json::array();
        for (const auto& [t, c] : v) terms.push_back(json{{"word", zq::zalg::to_string(t)}, {"coefficient", c.to_string()}});
        os << dump(json{{"k", k}, {"floor", floor}, {"word", word}, {"strategy", strategy}, {"terms", terms}});
    } else if (o.format == "csv") {
        os << "word,coefficient\n";
        for (const auto& [t, c] : v) os << csv_field(zq::zalg::to_string(t)) << ',' << csv_field(c.to_string()) << '\n';
    } else {
        os << zq::zalg::to_string(v) << '\n';
    }
    emit(o, os.str());
    return 0;
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
    std::string r;
    for (std::size_t i = 0; i < xs.size(); ++i) r += (i ? sep : "") + xs[i];
    return r;
}

int run_catalog(const Options& o) {
    using namespace zq::verify;
    std::ostringstream os;
    auto levels = [](const RelationInfo& r) {
        std::vector<std::string> l;
        for (int x : r.levels) l.push_back(x == 0 ? "any" : std::to_string(x));
        return l;
    };
    if (o.format == "json") {
        json items = json::array();
        for (const auto& r : catalog()) {
            items.push_back(json{{"id", r.id},
                                 {"suite", r.suite},
                                 {"levels", levels(r)},
                                 {"sectors", r.sectors},
                                 {"model", to_string(r.default_model)},
                                 {"abstract_allowed", r.abstract_allowed},
                                 {"coeff_layout", r.coeff_layout},
                                 {"direction", r.direction},
                                 {"description", r.description}});
        }
        os << dump(json{{"suites", suite_names()}, {"relations", items}});
    } else if (o.format == "csv") {
        os << "id,suite,levels,sectors,model,description\n";
        for (const auto& r : catalog()) {
            os << r.id << ',' << r.suite << ',' << join(levels(r), ";") << ',' << join(r.sectors, ";") << ',' << to_string(r.default_model)
               << ',' << csv_field(r.description) << '\n';
        }
    } else {
        for (const auto& r : catalog()) os << r.id << '\t' << r.suite << '\t' << r.description << '\n';
    }
    emit(o, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks of U_q(sl2^) and Z_q relations on truncated modules"};
    app.footer(kFooter);
    app.require_subcommand(1);

    Options o;
    const std::vector<std::string> formats{"json", "csv", "text"};
    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember(formats))->capture_default_str();
        sub->add_option("--out", o.out, "output file (default stdout)");
    };

    int k = 1;
    auto level_opt = [&](CLI::App* sub) { sub->add_option("--k", k, "level, a positive integer")->check(CLI::PositiveNumber)->capture_default_str(); };

    // verify
    CLI::App* verify = app.add_subcommand("verify", "run relation checks");
    std::string suite, sector, model, module;
    std::vector<std::string> relations;
    zq::verify::CheckWindow window;
    bool swapped = false, timing = false;
    level_opt(verify);
    verify->add_option("--suite", suite, "drinfeld, zq, clifford, vertex, abstract, modules or all")
        ->check(CLI::IsMember(zq::verify::suite_names()));
    verify->add_option("--relation", relations, "relation id (repeatable; see the catalog subcommand)");
    verify->add_option("--max-mode", window.max_mode, "largest |mode index|")->check(CLI::NonNegativeNumber)->capture_default_str();
    verify->add_option("--min-degree", window.min_degree, "lowest degree of the test vectors")->check(CLI::Range(-1000, 0))->capture_default_str();
    verify->add_option("--max-charge", window.max_charge, "largest |charge| of the test vectors")->check(CLI::NonNegativeNumber)->capture_default_str();
    verify->add_option("--sector", sector, "NS or R (level 2; both when omitted)")->check(CLI::IsMember({"NS", "R"}));
    verify->add_option("--model", model, "realized or abstract")->check(CLI::IsMember({"realized", "abstract"}));
    verify->add_option("--module", module, "highest weight label: L0, L1, 2L0, 2L1 or L0+L1");
    verify->add_flag("--swapped-direction", swapped, "expand the series prefactors in the opposite direction");
    verify->add_flag("--timing", timing, "record elapsed_ms");
    common(verify);

    // basis
    CLI::App* basis = app.add_subcommand("basis", "H basis of W(M), or a slice basis of a realized module");
    int floor = -4, max_charge = 2;
    std::string realization;
    level_opt(basis);
    basis->add_option("--floor,--min-degree", floor, "lowest degree")->check(CLI::Range(-1000, 0))->capture_default_str();
    basis->add_option("--realization", realization, "k1, k2-NS or k2-R (default: the H basis of W(M))")
        ->check(CLI::IsMember({"k1", "k2-NS", "k2-R"}));
    basis->add_option("--max-charge", max_charge, "largest |charge| for realized modules")->check(CLI::NonNegativeNumber)->capture_default_str();
    common(basis);

    // character
    CLI::App* character = app.add_subcommand("character", "graded dimensions of W(M) or of G");
    std::string which = "W";
    int n = 10;
    character->add_option("--which", which, "W or G")->check(CLI::IsMember({"W", "G"}))->capture_default_str();
    character->add_option("--n", n, "largest degree")->check(CLI::Range(0, 200))->capture_default_str();
    common(character);

    // rewrite
    CLI::App* rewrite = app.add_subcommand("rewrite", "H-normal form of a word applied to v0");
    std::string word, strategy = "rightmost";
    level_opt(rewrite);
    rewrite->add_option("--floor", floor, "degree floor")->check(CLI::Range(-1000, 0))->capture_default_str();
    rewrite->add_option("--word", word, "word literal, e.g. \"(+,-1)(-,-2)\"; the leftmost letter acts last")->required();
    rewrite->add_option("--strategy", strategy, "rightmost or leftmost")->check(CLI::IsMember({"rightmost", "leftmost"}))->capture_default_str();
    common(rewrite);

    CLI::App* cat = app.add_subcommand("catalog", "list the relation ids");
    common(cat);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(o, k, suite, relations, window, sector, model, module, swapped, timing);
        if (basis->parsed()) return run_basis(o, k, floor, realization, max_charge);
        if (character->parsed()) return run_character(o, which, n);
        if (rewrite->parsed()) return run_rewrite(o, k, floor, word, strategy);
        return run_catalog(o);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const std::invalid_argument& e) {
        // unknown ids, unsupported (relation, level, sector) combinations, malformed words
        std::cerr << "error: " << e.what() << "\nrun 'zq --help' for usage\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
