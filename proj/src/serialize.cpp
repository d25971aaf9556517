#include "ww/serialize.hpp"

#include <cctype>
#include <cstdio>
#include <string>

namespace ww {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void require_schema(const json& j) {
    if (!j.is_object()) throw InvalidInput("payload: expected a JSON object");
    if (j.contains("schema") && j.at("schema").get<int>() != 1) {
        throw InvalidInput("payload: unsupported schema version");
    }
}

} // namespace

std::string sign_function_hex(const SignFunction& f) {
    f.validate();
    const std::size_t m = f.size();
    const std::size_t digits = (m + 3) / 4;
    std::string out(digits, '0');
    for (std::size_t eps = 0; eps < m; ++eps) {
        if (f.values[eps] == 1) {
            const std::size_t digit = digits - 1 - eps / 4;
            const int nib = (out[digit] >= 'a' ? out[digit] - 'a' + 10 : out[digit] - '0') |
                            (1 << (eps % 4));
            out[digit] = static_cast<char>(nib < 10 ? '0' + nib : 'a' + nib - 10);
        }
    }
    return out;
}

SignFunction sign_function_from_hex(int n, const std::string& hex) {
    if (n < 1 || n > 30) throw InvalidInput("sign_function_from_hex: bad n");
    const std::size_t m = std::size_t{1} << n;
    const std::size_t digits = (m + 3) / 4;
    if (hex.size() != digits) {
        throw InvalidInput("sign_function_from_hex: expected " + std::to_string(digits) +
                           " hex digits");
    }
    SignFunction f;
    f.n = n;
    f.values.assign(m, -1);
    for (std::size_t eps = 0; eps < m; ++eps) {
        const char c = hex[digits - 1 - eps / 4];
        int nib;
        if (c >= '0' && c <= '9') nib = c - '0';
        else if (c >= 'a' && c <= 'f') nib = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') nib = c - 'A' + 10;
        else throw InvalidInput("sign_function_from_hex: invalid hex digit");
        if (nib & (1 << (eps % 4))) f.values[eps] = 1;
    }
    return f;
}

json to_json(const SignFunction& f) {
    json j;
    j["schema"] = 1;
    j["n"] = f.n;
    j["signs"] = std::vector<int>(f.values.begin(), f.values.end());
    j["hex"] = sign_function_hex(f);
    return j;
}

SignFunction sign_function_from_json(const json& j) {
    require_schema(j);
    SignFunction f;
    try {
        f.n = j.at("n").get<int>();
        if (j.contains("signs")) {
            for (const auto& v : j.at("signs")) {
                f.values.push_back(static_cast<std::int8_t>(v.get<int>()));
            }
        } else if (j.contains("hex")) {
            return sign_function_from_hex(f.n, j.at("hex").get<std::string>());
        } else {
            throw InvalidInput("SignFunction payload: need \"signs\" or \"hex\"");
        }
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("SignFunction payload: ") + e.what());
    }
    f.validate();
    return f;
}

json to_json(const WalshSpectrum& beta) {
    json j;
    j["schema"] = 1;
    j["n"] = beta.n;
    j["denominator"] = beta.denominator();
    j["numerators"] = beta.numer;
    std::vector<double> vals;
    vals.reserve(beta.numer.size());
    for (std::size_t s = 0; s < beta.numer.size(); ++s) vals.push_back(beta.beta(s));
    j["beta"] = vals;
    j["support_size"] = beta.support_size();
    return j;
}

json to_json(const AngleConfig& t) {
    json j;
    j["schema"] = 1;
    j["n"] = t.n;
    json pairs = json::array();
    for (const auto& pair : t.theta) pairs.push_back({pair[0], pair[1]});
    j["theta"] = pairs;
    return j;
}

AngleConfig angle_config_from_json(const json& j) {
    require_schema(j);
    AngleConfig t;
    try {
        t.n = j.at("n").get<int>();
        for (const auto& pair : j.at("theta")) {
            t.theta.push_back({pair.at(0).get<double>(), pair.at(1).get<double>()});
        }
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("AngleConfig payload: ") + e.what());
    }
    t.validate();
    return t;
}

json to_json(const SpectrumResult& r) {
    json j;
    j["schema"] = 1;
    j["n"] = r.n;
    json entries = json::array();
    for (std::size_t idx = 0; idx < r.entries.size(); ++idx) {
        const OmegaVector w = OmegaVector::from_index(r.n, idx);
        entries.push_back({{"omega", std::vector<int>(w.omega.begin(), w.omega.end())},
                           {"magnitude", r.entries[idx].magnitude},
                           {"phase", r.entries[idx].phase}});
    }
    j["entries"] = entries;
    j["norm"] = r.norm;
    const OmegaVector best = r.argmax_omega();
    j["argmax_omega"] = std::vector<int>(best.omega.begin(), best.omega.end());
    return j;
}

json to_json(const OptimizeReport& r) {
    json j;
    j["schema"] = 1;
    j["best_angles"] = to_json(r.best_angles);
    j["best_norm"] = r.best_norm;
    j["restarts_used"] = r.restarts_used;
    j["sweeps"] = r.sweeps;
    j["converged"] = r.converged;
    j["history"] = r.history;
    return j;
}

json to_json(const CorrelationVector& q) {
    json j;
    j["schema"] = 1;
    j["n"] = q.n;
    j["q"] = q.q;
    return j;
}

CorrelationVector correlation_vector_from_json(const json& j) {
    require_schema(j);
    CorrelationVector q;
    try {
        q.n = j.at("n").get<int>();
        q.q = j.at("q").get<std::vector<double>>();
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("CorrelationVector payload: ") + e.what());
    }
    q.validate();
    return q;
}

json to_json(const DenseHermitian& h) {
    json j;
    j["schema"] = 1;
    j["n"] = h.n;
    json rows = json::array();
    for (Eigen::Index r = 0; r < h.mat.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < h.mat.cols(); ++c) {
            row.push_back({h.mat(r, c).real(), h.mat(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    j["entries"] = rows;
    return j;
}

json to_json(const WilsonInterval& ci) {
    return json{{"lo", ci.lo}, {"hi", ci.hi}};
}

json to_json(const SampleRecord& r) {
    return json{{"sample_index", r.index}, {"f_hex", r.f_hex},   {"norm", r.norm},
                {"sweeps", r.sweeps},      {"restarts_used", r.restarts_used},
                {"converged", r.converged}};
}

json to_json(const ScalingRow& row) {
    json j;
    j["schema"] = 1;
    j["n"] = row.n;
    j["samples"] = row.samples;
    j["median"] = row.median;
    j["mean"] = row.mean;
    j["p95"] = row.p95;
    j["max"] = row.max;
    j["ratio_to_root_nlogn"] = row.ratio_to_root_nlogn;
    j["mk_ceiling"] = row.mk_ceiling;
    json recs = json::array();
    for (const auto& rec : row.records) recs.push_back(to_json(rec));
    j["records"] = recs;
    return j;
}

json to_json(const TailReport& r) {
    json j;
    j["schema"] = 1;
    j["n"] = r.n;
    j["samples"] = r.samples;
    j["threshold"] = r.threshold;
    j["empirical_probability"] = r.empirical_probability;
    j["wilson_ci_95"] = to_json(r.wilson_ci_95);
    j["bound_kind"] = r.bound_kind;
    j["bound_param"] = r.bound_param;
    j["bound_value"] = r.bound_value;
    j["note"] = r.note;
    return j;
}

json to_json(const SubnormalRow& r) {
    json j;
    j["schema"] = 1;
    j["lambda"] = r.lambda;
    j["cosh_value"] = r.cosh_value;
    j["gaussian_bound"] = r.gaussian_bound;
    j["analytic_ok"] = r.analytic_ok;
    j["empirical_mean"] = r.empirical_mean;
    j["four_sigma"] = r.four_sigma;
    j["empirical_ok"] = r.empirical_ok;
    return j;
}

std::string records_csv(const std::vector<SampleRecord>& records) {
    std::string out = "sample_index,f_hex,norm,sweeps,restarts_used,converged\n";
    for (const auto& r : records) {
        out += std::to_string(r.index);
        out += ',';
        out += r.f_hex;
        out += ',';
        out += fmt17(r.norm);
        out += ',';
        out += std::to_string(r.sweeps);
        out += ',';
        out += std::to_string(r.restarts_used);
        out += ',';
        out += r.converged ? "true" : "false";
        out += '\n';
    }
    return out;
}

} // namespace ww
