#include <CLI11.hpp>
#include <json.hpp>

#include "thomas/control.hpp"
#include "thomas/parse.hpp"
#include "thomas/print.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

using namespace thomas;
using nlohmann::json;

namespace {

struct Loaded {
    SystemFile file;
    Ranking rk;
    DiffSystem input() const { return {file.equations, file.inequations}; }
};

Loaded load(const std::string& path, int max_order) {
    Loaded L;
    L.file = parse_system_file(path);
    L.file.ctx->order_cap = max_order;
    if (L.file.ranking.empty())
        L.rk = Ranking::single_block(*L.file.ctx);
    else
        L.rk = Ranking::from_blocks(*L.file.ctx, L.file.ranking.blocks);
    return L;
}

std::vector<int> indet_list(const Context& ctx, const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string name;
    while (std::getline(ss, name, ',')) {
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        if (name.empty()) continue;
        out.push_back(ctx.indet_index(name));
    }
    if (out.empty()) throw ParseError("empty indeterminate list");
    return out;
}

// Reads a raw file as one candidate simple system: members sorted by leader.
// nullopt when some member has no derivative-variable leader, which already
// violates simplicity.
std::optional<SimpleDiffSystem> assemble(const Loaded& L) {
    Context& ctx = *L.file.ctx;
    RankingOrder ord(ctx, L.rk);
    SimpleDiffSystem T;
    auto fill = [&](const std::vector<Poly>& src, std::vector<Poly>& dst,
                    std::vector<VarId>& leaders) {
        std::vector<std::pair<VarId, Poly>> v;
        for (const Poly& p : src) {
            auto x = p.leader(ctx, ord);
            if (!x || ctx.info(*x).kind != VarKind::Der) return false;
            v.push_back({*x, p});
        }
        std::sort(v.begin(), v.end(),
                  [&](const auto& a, const auto& b) { return ord.less(a.first, b.first); });
        for (auto& [x, p] : v) {
            dst.push_back(std::move(p));
            leaders.push_back(x);
        }
        return true;
    };
    if (!fill(L.file.equations, T.equations, T.eq_leaders)) return std::nullopt;
    if (!fill(L.file.inequations, T.inequations, T.ineq_leaders)) return std::nullopt;
    return T;
}

json verdict_json(std::size_t idx, bool verdict, const std::string& witness,
                  const std::vector<std::string>& conditions) {
    json o;
    o["system"] = idx;
    o["verdict"] = verdict;
    if (!witness.empty()) o["witness"] = witness;
    o["conditions"] = conditions;
    return o;
}

int cmd_decompose(const Loaded& L, const Config& cfg, bool as_json) {
    Context& ctx = *L.file.ctx;
    auto systems = decompose_differential(L.input(), ctx, L.rk, cfg);
    if (as_json)
        std::cout << systems_json(systems, ctx, L.rk) << "\n";
    else
        std::cout << systems_text(systems, ctx, L.rk, true);
    return systems.empty() ? 1 : 0;
}

int cmd_simple_check(const Loaded& L, const Config& cfg, bool as_json) {
    Context& ctx = *L.file.ctx;
    auto T = assemble(L);
    bool ok = T && is_simple_differential(*T, ctx, L.rk, cfg);
    if (as_json)
        std::cout << json{{"simple", ok}} << "\n";
    else
        std::cout << (ok ? "true" : "false") << "\n";
    return 0;
}

int cmd_membership(const Loaded& L, const Config& cfg, bool as_json,
                   const std::string& expr, int sysidx) {
    Context& ctx = *L.file.ctx;
    auto systems = decompose_differential(L.input(), ctx, L.rk, cfg);
    if (systems.empty()) {
        std::cerr << "inconsistent system: empty decomposition\n";
        return 1;
    }
    if (sysidx < 0 || static_cast<std::size_t>(sysidx) >= systems.size())
        throw DomainError("--system out of range, decomposition has " +
                          std::to_string(systems.size()) + " systems");
    Poly p = parse_poly(expr, ctx);
    bool member = membership(p, systems[sysidx], ctx, L.rk);
    if (as_json) {
        RankingOrder ord(ctx, L.rk);
        json o;
        o["system"] = sysidx;
        o["poly"] = poly_to_string(p, ctx, ord);
        o["member"] = member;
        std::cout << o << "\n";
    } else {
        std::cout << (member ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_eliminate(const Loaded& L, const Config& cfg, bool as_json, int block) {
    Context& ctx = *L.file.ctx;
    RankingOrder ord(ctx, L.rk);
    auto systems = decompose_differential(L.input(), ctx, L.rk, cfg);
    if (systems.empty()) {
        std::cerr << "inconsistent system: empty decomposition\n";
        return 1;
    }
    auto elims = eliminate(systems, ctx, L.rk, block);
    if (as_json) {
        json arr = json::array();
        for (std::size_t i = 0; i < elims.size(); ++i) {
            json o;
            o["system"] = i;
            o["generators"] = json::array();
            for (const Poly& g : elims[i].generators)
                o["generators"].push_back(poly_to_string(g, ctx, ord));
            o["saturation"] = poly_to_string(elims[i].saturation, ctx, ord);
            arr.push_back(std::move(o));
        }
        std::cout << arr << "\n";
    } else {
        for (std::size_t i = 0; i < elims.size(); ++i) {
            std::cout << "# system " << (i + 1) << "\n";
            for (const Poly& g : elims[i].generators)
                std::cout << "gen " << poly_to_string(g, ctx, ord) << "\n";
            std::cout << "saturation " << poly_to_string(elims[i].saturation, ctx, ord)
                      << "\n";
            if (i + 1 < elims.size()) std::cout << "\n";
        }
    }
    return 0;
}

int cmd_observable(const Loaded& L, const Config& cfg, bool as_json,
                   const std::string& var, const std::string& wrt) {
    Context& ctx = *L.file.ctx;
    int x = ctx.indet_index(var);
    std::vector<ObsVerdict> verdicts;
    Ranking rk = L.rk;
    if (!wrt.empty()) {
        std::vector<int> Y = indet_list(ctx, wrt);
        verdicts = is_observable(L.input(), ctx, x, Y, cfg);
        // same block layout the check decomposed under, for printing
        std::set<int> taken(Y.begin(), Y.end());
        taken.insert(x);
        std::vector<int> top;
        for (std::size_t i = 0; i < ctx.n_indets(); ++i)
            if (!taken.count(static_cast<int>(i))) top.push_back(static_cast<int>(i));
        std::vector<std::vector<int>> blocks;
        if (!top.empty()) blocks.push_back(top);
        blocks.push_back({x});
        blocks.push_back(Y);
        rk = Ranking::from_blocks(ctx, blocks);
    } else {
        // the declared ranking must isolate the tested indeterminate in its
        // top block; everything below is fair game for the witness
        if (rk.blocks.empty() || rk.blocks[0] != std::vector<int>{x})
            throw DomainError("declared ranking does not isolate " + var +
                              " in its top block; pass --wrt instead");
        std::set<int> allowed;
        for (std::size_t b = 1; b < rk.blocks.size(); ++b)
            allowed.insert(rk.blocks[b].begin(), rk.blocks[b].end());
        auto systems = decompose_differential(L.input(), ctx, rk, cfg);
        for (auto& T : systems) {
            ObsVerdict v;
            v.system = T;
            auto w = observability_witness(T, ctx, rk, x, allowed);
            if (w) {
                v.verdict = true;
                v.witness = *w;
            } else {
                v.condition = "no order-zero equation in " + var +
                              " with nonvanishing leading coefficient and separant";
            }
            verdicts.push_back(std::move(v));
        }
    }
    if (verdicts.empty()) {
        std::cerr << "inconsistent system: empty decomposition\n";
        return 1;
    }
    RankingOrder ord(ctx, rk);
    if (as_json) {
        json arr = json::array();
        for (std::size_t i = 0; i < verdicts.size(); ++i) {
            const auto& v = verdicts[i];
            std::string w = v.verdict ? poly_to_string(v.witness, ctx, ord) : "";
            std::vector<std::string> conds;
            if (!v.condition.empty()) conds.push_back(v.condition);
            arr.push_back(verdict_json(i, v.verdict, w, conds));
        }
        std::cout << arr << "\n";
    } else {
        for (std::size_t i = 0; i < verdicts.size(); ++i) {
            const auto& v = verdicts[i];
            std::cout << "# system " << (i + 1) << "\n";
            std::cout << "observable " << (v.verdict ? "true" : "false") << "\n";
            if (v.verdict)
                std::cout << "witness " << poly_to_string(v.witness, ctx, ord) << "\n";
            else
                std::cout << "condition " << v.condition << "\n";
            if (i + 1 < verdicts.size()) std::cout << "\n";
        }
    }
    return 0;
}

int cmd_flat_check(const Loaded& L, const Config& cfg, bool as_json,
                   const std::string& outputs) {
    Context& ctx = *L.file.ctx;
    std::vector<int> Y = indet_list(ctx, outputs);
    std::set<int> Yset(Y.begin(), Y.end());
    std::vector<FlatVerdict> verdicts;

    // when the candidate outputs form one declared ranking block, reuse the
    // file's ranking and treat the blocks below as parameters
    int match = -1;
    for (std::size_t b = 0; b < L.rk.blocks.size(); ++b) {
        std::set<int> blk(L.rk.blocks[b].begin(), L.rk.blocks[b].end());
        if (blk == Yset) {
            match = static_cast<int>(b);
            break;
        }
    }
    if (match >= 0) {
        std::set<int> Pset;
        for (std::size_t b = static_cast<std::size_t>(match) + 1; b < L.rk.blocks.size();
             ++b)
            Pset.insert(L.rk.blocks[b].begin(), L.rk.blocks[b].end());
        auto systems = decompose_differential(L.input(), ctx, L.rk, cfg);
        for (auto& T : systems) {
            FlatVerdict v;
            v.system = T;
            std::string rep;
            v.verdict = flat_on_system(T, ctx, L.rk, Yset, Pset, &rep);
            if (!v.verdict) v.report = rep;
            verdicts.push_back(std::move(v));
        }
    } else {
        verdicts = is_flat_output(L.input(), ctx, Y, {}, cfg);
    }
    if (verdicts.empty()) {
        std::cerr << "inconsistent system: empty decomposition\n";
        return 1;
    }
    if (as_json) {
        json arr = json::array();
        for (std::size_t i = 0; i < verdicts.size(); ++i) {
            std::vector<std::string> conds;
            if (!verdicts[i].report.empty()) conds.push_back(verdicts[i].report);
            arr.push_back(verdict_json(i, verdicts[i].verdict, "", conds));
        }
        std::cout << arr << "\n";
    } else {
        for (std::size_t i = 0; i < verdicts.size(); ++i) {
            std::cout << "# system " << (i + 1) << "\n";
            std::cout << "flat " << (verdicts[i].verdict ? "true" : "false") << "\n";
            if (!verdicts[i].verdict) std::cout << "report " << verdicts[i].report << "\n";
            if (i + 1 < verdicts.size()) std::cout << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thomas decomposition of algebraic and differential systems"};
    app.require_subcommand(1);

    std::string input, format = "text", poly_expr, var, wrt, outputs;
    int sysidx = 0, block = 1;
    int max_order = 50;
    std::size_t max_systems = 10000;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", input, "system file")->required();
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--max-order", max_order, "derivative order cap");
        sub->add_option("--max-systems", max_systems, "pending-queue cap");
        return sub;
    };

    auto* dec = add_common(app.add_subcommand("decompose", "split into simple systems"));
    auto* chk = add_common(
        app.add_subcommand("simple-check", "test whether the input file is simple"));
    auto* mem = add_common(
        app.add_subcommand("membership", "saturated-ideal membership of a polynomial"));
    mem->add_option("--poly", poly_expr, "polynomial expression")->required();
    mem->add_option("--system", sysidx, "simple system index (0-based)");
    auto* eli = add_common(
        app.add_subcommand("eliminate", "equations in the lower ranking blocks"));
    eli->add_option("--block", block, "highest block kept (1-based)")->required();
    auto* obs =
        add_common(app.add_subcommand("observable", "algebraic observability check"));
    obs->add_option("--var", var, "indeterminate to test")->required();
    obs->add_option("--wrt", wrt, "comma-separated output indeterminates");
    auto* fla = add_common(app.add_subcommand("flat-check", "flat output check"));
    fla->add_option("--outputs", outputs, "comma-separated candidate outputs")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Loaded L = load(input, max_order);
        Config cfg;
        cfg.max_order = max_order;
        cfg.max_systems = max_systems;
        bool as_json = format == "json";
        if (app.got_subcommand(dec)) return cmd_decompose(L, cfg, as_json);
        if (app.got_subcommand(chk)) return cmd_simple_check(L, cfg, as_json);
        if (app.got_subcommand(mem)) return cmd_membership(L, cfg, as_json, poly_expr, sysidx);
        if (app.got_subcommand(eli)) return cmd_eliminate(L, cfg, as_json, block);
        if (app.got_subcommand(obs)) return cmd_observable(L, cfg, as_json, var, wrt);
        if (app.got_subcommand(fla)) return cmd_flat_check(L, cfg, as_json, outputs);
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
