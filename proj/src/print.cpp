#include "thomas/print.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace thomas {

using nlohmann::json;

namespace {

struct FullLess {
    const Context* ctx;
    const VarOrder* ord;
    bool operator()(VarId a, VarId b) const {
        if (a == b) return false;
        bool ca = ctx->is_coeff(a);
        bool cb = ctx->is_coeff(b);
        if (ca != cb) return ca;
        if (ca) return a < b;
        return ord->less(a, b);
    }
};

// monomial comparison by exponents along descending variables
bool term_greater(const Poly::Term& s, const Poly::Term& t, const FullLess& less) {
    std::vector<VarId> vs;
    for (const auto& [v, e] : s.mon.factors) vs.push_back(v);
    for (const auto& [v, e] : t.mon.factors) vs.push_back(v);
    std::sort(vs.begin(), vs.end(), [&](VarId a, VarId b) { return less(b, a); });
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (VarId v : vs) {
        std::uint32_t da = s.mon.degree_of(v);
        std::uint32_t db = t.mon.degree_of(v);
        if (da != db) return da > db;
    }
    return false;
}

std::string mon_to_string(const Monomial& m, const Context& ctx, const FullLess& less) {
    std::vector<std::pair<VarId, std::uint32_t>> fs = m.factors;
    std::sort(fs.begin(), fs.end(),
              [&](const auto& a, const auto& b) { return less(a.first, b.first); });
    std::string out;
    for (const auto& [v, e] : fs) {
        if (!out.empty()) out += "*";
        out += ctx.var_name(v);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

} // namespace

std::string poly_to_string(const Poly& p, const Context& ctx, const VarOrder& ord) {
    if (p.is_zero()) return "0";
    FullLess less{&ctx, &ord};
    std::vector<Poly::Term> ts = p.terms();
    std::stable_sort(ts.begin(), ts.end(), [&](const Poly::Term& a, const Poly::Term& b) {
        return term_greater(a, b, less);
    });
    std::string out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        Rational c = ts[i].coeff;
        bool neg = c < 0;
        if (i == 0) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Rational a = neg ? Rational(-c) : c;
        std::string ms = mon_to_string(ts[i].mon, ctx, less);
        if (ms.empty()) {
            out += to_string(a);
        } else {
            if (!(a == 1)) out += to_string(a) + "*";
            out += ms;
        }
    }
    return out;
}

std::string header_text(const Context& ctx, const Ranking& rk) {
    std::ostringstream os;
    os << "indep";
    for (const auto& n : ctx.indep_names()) os << " " << n;
    os << "\n";
    if (!ctx.constant_names().empty()) {
        os << "const";
        for (const auto& n : ctx.constant_names()) os << " " << n;
        os << "\n";
    }
    os << "indets";
    for (const auto& n : ctx.indet_names()) os << " " << n;
    os << "\n";
    os << "rank ";
    for (std::size_t b = 0; b < rk.blocks.size(); ++b) {
        if (b) os << " > ";
        os << "[";
        for (std::size_t k = 0; k < rk.blocks[b].size(); ++k) {
            if (k) os << ",";
            os << ctx.indet_name(rk.blocks[b][k]);
        }
        os << "]";
    }
    os << "\n";
    return os.str();
}

template <typename Sys>
static std::string systems_text_impl(const std::vector<Sys>& v, const Context& ctx,
                                     const VarOrder& ord) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << "# system " << (i + 1) << "\n";
        for (const Poly& p : v[i].equations) os << "eq " << poly_to_string(p, ctx, ord) << "\n";
        for (const Poly& p : v[i].inequations)
            os << "ineq " << poly_to_string(p, ctx, ord) << "\n";
        if (i + 1 < v.size()) os << "\n";
    }
    if (v.empty()) os << "# empty decomposition\n";
    return os.str();
}

std::string systems_text(const std::vector<SimpleAlgSystem>& v, const Context& ctx,
                         const VarOrder& ord) {
    return systems_text_impl(v, ctx, ord);
}

std::string systems_text(const std::vector<SimpleDiffSystem>& v, const Context& ctx,
                         const Ranking& rk, bool with_header) {
    RankingOrder ord(ctx, rk);
    std::string body = systems_text_impl(v, ctx, ord);
    if (!with_header) return body;
    return header_text(ctx, rk) + "\n" + body;
}

static json ranking_json(const Context& ctx, const Ranking& rk) {
    json blocks = json::array();
    for (const auto& blk : rk.blocks) {
        json names = json::array();
        for (int i : blk) names.push_back(ctx.indet_name(i));
        blocks.push_back(names);
    }
    return blocks;
}

std::string systems_json(const std::vector<SimpleAlgSystem>& v, const Context& ctx,
                         const VarOrder& ord) {
    json arr = json::array();
    for (const auto& s : v) {
        json o;
        o["equations"] = json::array();
        o["inequations"] = json::array();
        o["leaders"] = json::array();
        for (const Poly& p : s.equations) o["equations"].push_back(poly_to_string(p, ctx, ord));
        for (const Poly& p : s.inequations)
            o["inequations"].push_back(poly_to_string(p, ctx, ord));
        for (VarId x : s.eq_leaders) o["leaders"].push_back(ctx.var_name(x));
        for (VarId x : s.ineq_leaders) o["leaders"].push_back(ctx.var_name(x));
        arr.push_back(std::move(o));
    }
    return arr.dump(2);
}

std::string systems_json(const std::vector<SimpleDiffSystem>& v, const Context& ctx,
                         const Ranking& rk) {
    RankingOrder ord(ctx, rk);
    json arr = json::array();
    for (const auto& s : v) {
        json o;
        o["equations"] = json::array();
        o["inequations"] = json::array();
        o["leaders"] = json::array();
        o["cones"] = json::array();
        for (const Poly& p : s.equations) o["equations"].push_back(poly_to_string(p, ctx, ord));
        for (const Poly& p : s.inequations)
            o["inequations"].push_back(poly_to_string(p, ctx, ord));
        for (VarId x : s.eq_leaders) o["leaders"].push_back(ctx.var_name(x));
        for (VarId x : s.ineq_leaders) o["leaders"].push_back(ctx.var_name(x));
        for (const auto& cone : s.cones) {
            json c = json::array();
            for (int j : cone) c.push_back(ctx.indep_name(j));
            o["cones"].push_back(std::move(c));
        }
        o["ranking"] = ranking_json(ctx, rk);
        arr.push_back(std::move(o));
    }
    return arr.dump(2);
}

} // namespace thomas
