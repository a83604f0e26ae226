#include "adem/json_io.hpp"

#include <json.hpp>

namespace adem::jsonio {

using json = nlohmann::ordered_json;

namespace {

json monomial_json(const steenrod::Monomial& m)
{
    json j;
    j["coeff"] = 0;  // overwritten by caller
    j["exponents"] = m.exps;
    j["bocksteins"] = json::array();
    for (auto e : m.eps)
        j["bocksteins"].push_back(static_cast<int>(e));
    return j;
}

}  // namespace

std::string element_json(const steenrod::Element& e)
{
    json j;
    j["p"] = e.p();
    j["terms"] = json::array();
    for (const auto& t : e.terms()) {
        json tj = monomial_json(t.mon);
        tj["coeff"] = t.coeff;
        j["terms"].push_back(std::move(tj));
    }
    return j.dump();
}

std::string verify_report_json(const oracle::VerifyReport& r)
{
    json j;
    j["p"] = r.p;
    j["k_max"] = r.k_max;
    j["dims"] = r.dims;
    j["mismatches"] = json::array();
    for (const auto& m : r.mismatches) {
        j["mismatches"].push_back(
            {{"degree", m.degree}, {"what", m.what}, {"core", m.core}, {"oracle", m.oracle}});
    }
    j["ok"] = r.ok();
    return j.dump();
}

std::string obstruction_report_json(const pbw::ObstructionReport& r)
{
    json j;
    j["p"] = r.p;
    j["mode"] = pbw::mode_name(r.mode);
    j["k_max"] = r.k_max;
    j["profile"] = r.profile;
    if (r.negative_at)
        j["negative_dimension_at"] = *r.negative_at;
    j["certificates"] = json::array();
    for (const auto& c : r.certificates) {
        json cj;
        cj["id"] = c.id;
        cj["claim"] = c.claim;
        cj["pass"] = c.pass;
        cj["load_bearing"] = c.load_bearing;
        json w = json::object();
        for (const auto& [k, v] : c.witnesses)
            w[k] = v;
        cj["witnesses"] = std::move(w);
        if (!c.note.empty())
            cj["note"] = c.note;
        j["certificates"].push_back(std::move(cj));
    }
    j["verdict"] = r.verdict;
    return j.dump();
}

std::string tensor_json(const milnor::TensorElement& e)
{
    json j = json::array();
    for (const auto& t : e.terms()) {
        json term = json::array();
        for (const auto& f : t.factors)
            term.push_back(f.exps);
        term.push_back(t.coeff);
        j.push_back(std::move(term));
    }
    return j.dump();
}

std::string coassoc_report_json(const milnor::CoassocReport& r)
{
    json j;
    j["p"] = r.p;
    j["K"] = r.K;
    j["pass"] = r.pass;
    if (!r.detail.empty())
        j["detail"] = r.detail;
    return j.dump();
}

std::string dp_element_json(const dpow::DPElement& e)
{
    json j;
    j["p"] = e.ctx().p;
    j["m"] = e.ctx().m;
    j["odd"] = e.ctx().n;
    j["N"] = e.ctx().N;
    j["terms"] = json::array();
    for (const auto& t : e.terms())
        j["terms"].push_back({{"coeff", t.coeff}, {"exponents", t.mon.exps}});
    return j.dump();
}

std::string derivation_json(const dpow::Derivation& d)
{
    json j;
    j["parity"] = d.parity;
    j["coefficients"] = json::array();
    for (const auto& c : d.coeffs) {
        json terms = json::array();
        for (const auto& t : c.terms())
            terms.push_back({{"coeff", t.coeff}, {"exponents", t.mon.exps}});
        j["coefficients"].push_back(std::move(terms));
    }
    return j.dump();
}

std::string axiom_report_json(const lie2::AxiomReport& r)
{
    json j;
    j["pass"] = r.pass;
    j["checks"] = json::array();
    for (const auto& c : r.checks) {
        json cj;
        cj["axiom"] = c.axiom;
        cj["pass"] = c.pass;
        if (!c.witness.empty())
            cj["witness"] = c.witness;
        j["checks"].push_back(std::move(cj));
    }
    return j.dump();
}

lie2::LieSuperData lie_data_from_json(const std::string& text)
{
    json j = json::parse(text);
    lie2::LieSuperData g;
    std::string field = j.at("field").get<std::string>();
    if (field == "F2")
        g.field = lie2::GroundField::F2;
    else if (field == "F4")
        g.field = lie2::GroundField::F4;
    else
        throw std::invalid_argument("lie data: field must be F2 or F4");

    for (const auto& b : j.at("basis")) {
        lie2::BasisVec v;
        v.name = b.at("name").get<std::string>();
        v.parity = b.at("parity").get<int>();
        v.degree = b.value("degree", 0);
        if (v.parity != 0 && v.parity != 1)
            throw std::invalid_argument("lie data: parity must be 0 or 1");
        g.basis.push_back(std::move(v));
    }
    const size_t n = g.basis.size();
    g.bracket.assign(n, std::vector<lie2::Vec>(n, lie2::Vec(n, 0)));
    g.squaring.assign(n, lie2::Vec(n, 0));

    auto check_coeffs = [&](const json& arr) {
        if (arr.size() != n)
            throw std::invalid_argument("lie data: coeffs must have one entry per basis vector");
        lie2::Vec v(n, 0);
        for (size_t k = 0; k < n; ++k) {
            int c = arr[k].get<int>();
            if (c < 0 || c >= g.gf().order())
                throw std::invalid_argument("lie data: coefficient outside the ground field");
            v[k] = c;
        }
        return v;
    };

    for (const auto& e : j.value("bracket", json::array())) {
        size_t i = e.at("i").get<size_t>();
        size_t jj = e.at("j").get<size_t>();
        if (i >= n || jj >= n)
            throw std::invalid_argument("lie data: bracket index out of range");
        lie2::Vec v = check_coeffs(e.at("coeffs"));
        g.bracket[i][jj] = v;
        g.bracket[jj][i] = v;  // char 2
    }
    for (const auto& e : j.value("squaring", json::array())) {
        size_t i = e.at("i").get<size_t>();
        if (i >= n)
            throw std::invalid_argument("lie data: squaring index out of range");
        g.squaring[i] = check_coeffs(e.at("coeffs"));
    }
    return g;
}

std::string lie_data_json(const lie2::LieSuperData& g)
{
    json j;
    j["field"] = g.field == lie2::GroundField::F2 ? "F2" : "F4";
    j["basis"] = json::array();
    for (const auto& b : g.basis)
        j["basis"].push_back({{"name", b.name}, {"parity", b.parity}, {"degree", b.degree}});
    j["bracket"] = json::array();
    for (size_t i = 0; i < g.dim(); ++i)
        for (size_t k = i; k < g.dim(); ++k) {
            bool nz = false;
            for (int c : g.bracket[i][k])
                if (c)
                    nz = true;
            if (nz)
                j["bracket"].push_back({{"i", i}, {"j", k}, {"coeffs", g.bracket[i][k]}});
        }
    j["squaring"] = json::array();
    for (size_t i = 0; i < g.dim(); ++i) {
        bool nz = false;
        for (int c : g.squaring[i])
            if (c)
                nz = true;
        if (nz)
            j["squaring"].push_back({{"i", i}, {"coeffs", g.squaring[i]}});
    }
    return j.dump(2);
}

}  // namespace adem::jsonio
