#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "whs/classify.hpp"
#include "whs/cyclic_quotient.hpp"
#include "whs/link_topology.hpp"
#include "whs/rational.hpp"
#include "whs/weights.hpp"

namespace whs::cli {

namespace detail {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline json json_int(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();  // out of int64 range, keep exact as a string
}

inline Int parse_int(const std::string& s) {
    if (s.empty()) throw UsageError("empty number");
    std::size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size()) throw UsageError("malformed number '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw UsageError("malformed number '" + s + "'");
    return Int(s);
}

// Comma-separated weight list, no spaces, e.g. "51,2,1".
inline std::vector<Int> parse_weight_list(const std::string& s) {
    std::vector<Int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(parse_int(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

inline json to_json(const WeightVector& w) {
    json arr = json::array();
    for (const Int& v : w.entries()) arr.push_back(json_int(v));
    return arr;
}

inline json to_json(const SeifertData& s) {
    json fibers = json::array();
    for (const auto& [mult, count] : s.fibers)
        fibers.push_back(json::array({json_int(mult), json_int(count)}));
    return {{"genus", json_int(s.genus)}, {"euler", s.euler.str()}, {"fibers", fibers}};
}

inline json to_json(const ConicalVerdict& v) {
    json j;
    switch (v.kind) {
        case Conical::MetricallyConical: j["verdict"] = "metrically_conical"; break;
        case Conical::NotConical: j["verdict"] = "not_conical"; break;
        case Conical::Unknown: j["verdict"] = "unknown"; break;
    }
    if (v.mechanism)
        j["mechanism"] = *v.mechanism == Mechanism::Theorem1 ? "theorem_1" : "theorem_1_5";
    else
        j["mechanism"] = nullptr;
    if (v.action && v.generator)
        j["witness"] = {{"alpha", json_int(v.action->alpha)},
                        {"beta", json_int(v.action->beta)},
                        {"generator", json::array({json_int(v.generator->a), json_int(v.generator->b)})}};
    else
        j["witness"] = nullptr;
    return j;
}

inline json to_json(const CompareVerdict& v) {
    json j;
    j["verdict"] = v.kind == Compare::NotBiLipschitz ? "not_bi_lipschitz" : "inconclusive";
    if (v.certificate)
        j["certificate"] = {{"side", v.certificate->side == FiredSide::Left ? "left" : "right"},
                            {"lhs", v.certificate->lhs.str()},
                            {"rhs", v.certificate->rhs.str()}};
    else
        j["certificate"] = nullptr;
    return j;
}

inline const char* comparison_name(LinkComparison c) {
    switch (c) {
        case LinkComparison::EquivalentBundle: return "equivalent_bundle";
        case LinkComparison::InvariantsAgree: return "invariants_agree";
        default: return "distinguished";
    }
}

inline std::string ratio_text(const Ratio& r) { return r.str(); }

inline std::string weights_text(const WeightVector& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.entries().size(); ++i) {
        if (i) s += ", ";
        s += w.entries()[i].str();
    }
    return s + ")";
}

// A parsed input source: one of brieskorn / cyclic / weights.
struct Source {
    enum class Kind { Brieskorn, Cyclic, Weights } kind;
    std::vector<Int> values;

    static Source take(const std::vector<std::string>& args, std::size_t& i) {
        if (i >= args.size()) throw UsageError("missing source");
        const std::string& k = args[i++];
        Source s;
        if (k == "brieskorn") {
            s.kind = Kind::Brieskorn;
            for (int j = 0; j < 3; ++j) {
                if (i >= args.size()) throw UsageError("brieskorn needs three exponents");
                s.values.push_back(parse_int(args[i++]));
            }
        } else if (k == "cyclic") {
            s.kind = Kind::Cyclic;
            for (int j = 0; j < 2; ++j) {
                if (i >= args.size()) throw UsageError("cyclic needs n and q");
                s.values.push_back(parse_int(args[i++]));
            }
        } else if (k == "weights") {
            s.kind = Kind::Weights;
            if (i >= args.size()) throw UsageError("weights needs a comma-separated list");
            s.values = parse_weight_list(args[i++]);
        } else {
            throw UsageError("unknown source '" + k + "'");
        }
        return s;
    }

    json describe() const {
        json arr = json::array();
        for (const Int& v : values) arr.push_back(json_int(v));
        switch (kind) {
            case Kind::Brieskorn: return {{"source", "brieskorn"}, {"exponents", arr}};
            case Kind::Cyclic: return {{"source", "cyclic"}, {"n", json_int(values[0])}, {"q", json_int(values[1])}};
            default: return {{"source", "weights"}, {"values", arr}};
        }
    }
};

struct Options {
    bool json = false;
    Int maxN = 5000;
    Int hilbertMaxN = 500;
};

inline void check_cyclic_bounds(const Source& s, const Options& opt) {
    if (s.kind != Source::Kind::Cyclic) return;
    const Int& n = s.values[0];
    if (n > opt.maxN)
        throw UsageError("n = " + n.str() + " exceeds the --max-n bound (" + opt.maxN.str() + ")");
    if (n > opt.hilbertMaxN)
        throw UsageError("n = " + n.str() + " exceeds the generator-enumeration bound (" +
                         opt.hilbertMaxN.str() + "); raise it with --max-n");
}

}  // namespace detail

/// Parses argv (without the program name), runs one command, writes the
/// result to `out` and diagnostics to `err`. Returns 0 on success, 2 on
/// rejected input.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    using namespace detail;
    using json = nlohmann::json;
    try {
        Options opt;
        std::vector<std::string> args;
        for (std::size_t i = 0; i < argv.size(); ++i) {
            if (argv[i] == "--json") {
                opt.json = true;
            } else if (argv[i] == "--max-n") {
                if (i + 1 >= argv.size()) throw UsageError("--max-n needs a value");
                Int v = parse_int(argv[++i]);
                if (v < 2) throw UsageError("--max-n must be >= 2");
                opt.maxN = v;
                opt.hilbertMaxN = v;
            } else {
                args.push_back(argv[i]);
            }
        }
        if (args.empty())
            throw UsageError("usage: weights|generators|classify|compare|link|corollary ...");

        const std::string verb = args[0];
        std::size_t i = 1;
        json result, input;

        auto finish = [&](const std::string& human) {
            if (opt.json)
                out << json{{"command", verb}, {"input", input}, {"result", result}}.dump() << "\n";
            else
                out << human;
            return 0;
        };

        if (verb == "weights") {
            Source s = Source::take(args, i);
            if (i != args.size()) throw UsageError("trailing arguments");
            if (s.kind == Source::Kind::Weights)
                throw UsageError("weights verb takes a brieskorn or cyclic source");
            check_cyclic_bounds(s, opt);
            WeightVector raw = [&] {
                if (s.kind == Source::Kind::Brieskorn) {
                    auto t = BrieskornTriple::make(s.values[0], s.values[1], s.values[2]);
                    Int l = lcm(lcm(t.a1, t.a2), t.a3);
                    return WeightVector::from_list({l / t.a1, l / t.a2, l / t.a3});
                }
                return diagonal_weights(CyclicQuotient::make(s.values[0], s.values[1]));
            }();
            WeightVector norm = raw.normalize();
            input = s.describe();
            result = {{"weights", to_json(raw)}, {"normalized", to_json(norm)}};
            return finish("weights: " + weights_text(raw) +
                          "\nnormalized: " + weights_text(norm) + "\n");
        }

        if (verb == "generators") {
            if (args.size() != 3) throw UsageError("usage: generators N Q");
            Source s{Source::Kind::Cyclic, {parse_int(args[1]), parse_int(args[2])}};
            check_cyclic_bounds(s, opt);
            auto cq = CyclicQuotient::make(s.values[0], s.values[1]);
            auto gens = minimal_generators(cq);
            input = s.describe();
            json garr = json::array();
            std::string human;
            for (const auto& g : gens) {
                garr.push_back(json::array({json_int(g.a), json_int(g.b)}));
                human += "(" + g.a.str() + ", " + g.b.str() + ")  weight " +
                         g.weight().str() + "\n";
            }
            result = {{"generators", garr}, {"weights", to_json(diagonal_weights(cq))}};
            return finish(human);
        }

        if (verb == "classify") {
            Source s = Source::take(args, i);
            if (i != args.size()) throw UsageError("trailing arguments");
            check_cyclic_bounds(s, opt);
            ConicalVerdict v = [&] {
                switch (s.kind) {
                    case Source::Kind::Cyclic:
                        return conical_cyclic(CyclicQuotient::make(s.values[0], s.values[1]));
                    case Source::Kind::Brieskorn:
                        return conical_from_weights(brieskorn_weights(
                            BrieskornTriple::make(s.values[0], s.values[1], s.values[2])));
                    default:
                        return conical_from_weights(WeightVector::from_list(s.values));
                }
            }();
            input = s.describe();
            result = to_json(v);
            std::string human = "verdict: " + std::string(result["verdict"]) + "\n";
            if (v.mechanism)
                human += "mechanism: " + std::string(result["mechanism"]) + "\n";
            if (v.action && v.generator)
                human += "witness: alpha=" + v.action->alpha.str() +
                         " beta=" + v.action->beta.str() + " generator=(" +
                         v.generator->a.str() + ", " + v.generator->b.str() + ")\n";
            return finish(human);
        }

        if (verb == "compare") {
            std::optional<Source> left, right;
            while (i < args.size()) {
                if (args[i] == "--left") {
                    ++i;
                    left = Source::take(args, i);
                } else if (args[i] == "--right") {
                    ++i;
                    right = Source::take(args, i);
                } else {
                    throw UsageError("unexpected argument '" + args[i] + "'");
                }
            }
            if (!left || !right) throw UsageError("compare needs --left and --right sources");
            check_cyclic_bounds(*left, opt);
            check_cyclic_bounds(*right, opt);
            auto resolve = [](const Source& s) {
                switch (s.kind) {
                    case Source::Kind::Cyclic:
                        return diagonal_weights(CyclicQuotient::make(s.values[0], s.values[1]));
                    case Source::Kind::Brieskorn:
                        return brieskorn_weights(
                            BrieskornTriple::make(s.values[0], s.values[1], s.values[2]));
                    default:
                        return WeightVector::from_list(s.values);
                }
            };
            CompareVerdict v = compare_weights(resolve(*left), resolve(*right));
            input = {{"left", left->describe()}, {"right", right->describe()}};
            result = to_json(v);
            std::string human = "verdict: " + std::string(result["verdict"]) + "\n";
            if (v.certificate)
                human += "certificate: " + std::string(result["certificate"]["side"]) +
                         " inequality, " + v.certificate->lhs.str() + " > " +
                         v.certificate->rhs.str() + "\n";
            return finish(human);
        }

        if (verb == "link") {
            if (args.size() != 4) throw UsageError("usage: link A1 A2 A3");
            auto t = BrieskornTriple::make(parse_int(args[1]), parse_int(args[2]),
                                           parse_int(args[3]));
            SeifertData s = seifert_data(t);
            input = {{"source", "brieskorn"},
                     {"exponents", json::array({json_int(t.a1), json_int(t.a2), json_int(t.a3)})}};
            result = to_json(s);
            std::string human = "genus: " + s.genus.str() + "\neuler: " + s.euler.str() + "\n";
            human += "fibers:";
            if (s.fibers.empty()) human += " none";
            for (const auto& [mult, count] : s.fibers)
                human += " " + mult.str() + "x" + count.str();
            return finish(human + "\n");
        }

        if (verb == "corollary") {
            if (args.size() != 1) throw UsageError("corollary takes no arguments");
            CorollaryReport r = corollary_report();
            input = json::object();
            result = {{"left_triple", json::array({json_int(r.left.a1), json_int(r.left.a2), json_int(r.left.a3)})},
                      {"right_triple", json::array({json_int(r.right.a1), json_int(r.right.a2), json_int(r.right.a3)})},
                      {"left_weights", to_json(r.leftWeights)},
                      {"right_weights", to_json(r.rightWeights)},
                      {"left_link", to_json(r.leftLink)},
                      {"right_link", to_json(r.rightLink)},
                      {"same_link", comparison_name(r.linkComparison)},
                      {"compare", to_json(r.comparison)},
                      {"computed_genus", json_int(r.computedGenus)},
                      {"paper_stated_genus", json_int(r.paperStatedGenus)}};
            std::string human;
            human += "left  (2,51,102): weights " + weights_text(r.leftWeights) + "\n";
            human += "right (12,15,20): weights " + weights_text(r.rightWeights) + "\n";
            human += "links: " + std::string(comparison_name(r.linkComparison)) +
                     ", euler " + r.leftLink.euler.str() + "\n";
            human += "computed genus: " + r.computedGenus.str() +
                     " (stated in the source: " + r.paperStatedGenus.str() + ")\n";
            human += "compare: " + std::string(to_json(r.comparison)["verdict"]);
            if (r.comparison.certificate)
                human += ", " + r.comparison.certificate->lhs.str() + " > " +
                         r.comparison.certificate->rhs.str();
            return finish(human + "\n");
        }

        throw UsageError("unknown command '" + verb + "'");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace whs::cli
