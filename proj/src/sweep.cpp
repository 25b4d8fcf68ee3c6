#include "rsos/sweep.hpp"

#include "rsos/closedforms.hpp"
#include "rsos/hookdiff.hpp"
#include "rsos/striking.hpp"
#include "rsos/transforms.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace rsos {

std::string to_string(Model m) { return m == Model::Abf ? "abf" : "parafermion"; }

std::string to_string(Method m) {
    switch (m) {
        case Method::Brute: return "brute";
        case Method::Bosonic: return "bosonic";
        case Method::Fermionic1: return "fermionic1";
        case Method::Fermionic2: return "fermionic2";
        case Method::Recursion: return "recursion";
        case Method::Dfunction: return "dfunction";
    }
    return "?";
}

Model parse_model(const std::string& s) {
    if (s == "abf") return Model::Abf;
    if (s == "parafermion") return Model::Parafermion;
    throw std::invalid_argument("unknown model: " + s);
}

Method parse_method(const std::string& s) {
    if (s == "brute") return Method::Brute;
    if (s == "bosonic") return Method::Bosonic;
    if (s == "fermionic1") return Method::Fermionic1;
    if (s == "fermionic2") return Method::Fermionic2;
    if (s == "recursion") return Method::Recursion;
    if (s == "dfunction") return Method::Dfunction;
    throw std::invalid_argument("unknown method: " + s);
}

ReportFormat parse_format(const std::string& s) {
    if (s == "text") return ReportFormat::Text;
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    throw std::invalid_argument("unknown format: " + s);
}

void SweepConfig::validate() const {
    if (p_primes.empty()) throw std::invalid_argument("at least one p' required");
    for (int p : p_primes)
        if (p < 2) throw std::invalid_argument("p' must be at least 2");
    if (max_L < 0) throw std::invalid_argument("max L must be nonnegative");
    if (exact_L && *exact_L < 0) throw std::invalid_argument("L must be nonnegative");
    if (models.empty()) throw std::invalid_argument("at least one model required");
    if (methods.empty()) throw std::invalid_argument("at least one method required");
    if (workers < 1) throw std::invalid_argument("workers must be positive");
    for (int s : systems)
        if (s != 1 && s != 2) throw std::invalid_argument("system must be 1 or 2");
}

namespace {

std::vector<FamilyParams> sweep_families(const SweepConfig& config) {
    std::vector<FamilyParams> out;
    for (int pp : config.p_primes) {
        for (int a = 1; a <= pp - 1; ++a) {
            for (int b = 1; b <= pp - 1; ++b) {
                for (int c : {b - 1, b + 1}) {
                    if (c < 1 || c > pp - 1) continue;
                    int lo = config.exact_L ? *config.exact_L : 0;
                    int hi = config.exact_L ? *config.exact_L : config.max_L;
                    for (int L = lo; L <= hi; ++L) {
                        if ((L + a - b) % 2 != 0) continue;
                        out.push_back({pp, a, b, c, L});
                    }
                }
            }
        }
    }
    return out;
}

struct LineResult {
    FamilyParams family;
    std::string label;  // model or system column
    bool pass = true;
    std::string detail;
};

std::string family_str(const FamilyParams& fp) {
    std::ostringstream os;
    os << fp.p_prime << " " << fp.a << " " << fp.b << " " << (fp.c ? *fp.c : 0) << " " << fp.L;
    return os.str();
}

void write_report(const SweepConfig& config, const std::vector<LineResult>& lines,
                  std::ostream& out) {
    std::size_t fails = 0;
    for (const auto& r : lines)
        if (!r.pass) ++fails;
    switch (config.format) {
        case ReportFormat::Text:
            for (const auto& r : lines) {
                out << family_str(r.family) << " " << r.label << " : "
                    << (r.pass ? "PASS" : "FAIL");
                if (!r.detail.empty()) out << " " << r.detail;
                out << "\n";
            }
            out << "summary: " << lines.size() << " families, " << lines.size() - fails
                << " pass, " << fails << " fail\n";
            break;
        case ReportFormat::Csv:
            out << "p_prime,a,b,c,L,label,status,detail\n";
            for (const auto& r : lines) {
                out << r.family.p_prime << "," << r.family.a << "," << r.family.b << ","
                    << (r.family.c ? *r.family.c : 0) << "," << r.family.L << "," << r.label
                    << "," << (r.pass ? "PASS" : "FAIL") << ",\"" << r.detail << "\"\n";
            }
            break;
        case ReportFormat::Json: {
            out << "{\"families\":[";
            bool first = true;
            for (const auto& r : lines) {
                if (!first) out << ",";
                first = false;
                out << "{\"p_prime\":" << r.family.p_prime << ",\"a\":" << r.family.a
                    << ",\"b\":" << r.family.b << ",\"c\":" << (r.family.c ? *r.family.c : 0)
                    << ",\"L\":" << r.family.L << ",\"label\":\"" << r.label << "\",\"status\":\""
                    << (r.pass ? "PASS" : "FAIL") << "\",\"detail\":\"" << r.detail << "\"}";
            }
            out << "],\"total\":" << lines.size() << ",\"pass\":" << lines.size() - fails
                << ",\"fail\":" << fails << "}\n";
            break;
        }
    }
}

/// Deterministic worker pool: job i writes slot i; output is merged in
/// family order regardless of completion order.
template <typename Job, typename Fn>
void run_jobs(const std::vector<Job>& jobs, int workers, std::vector<LineResult>& results,
              Fn&& fn) {
    results.resize(jobs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            results[i] = fn(jobs[i], i);
        }
    };
    int n = std::max(1, std::min<int>(workers, static_cast<int>(jobs.size())));
    if (n == 1) {
        work();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (int i = 0; i < n; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
}

std::string exp_str(QExp e) {
    std::ostringstream os;
    if (e.quarters % 4 == 0) os << e.quarters / 4;
    else os << e.quarters << "/4";
    return os.str();
}

/// First exponent where the two polynomials differ, with both coefficients.
std::string first_discrepancy(const LaurentPoly& a, const LaurentPoly& b) {
    std::set<QExp> exps;
    for (const auto& [e, c] : a.terms()) exps.insert(e);
    for (const auto& [e, c] : b.terms()) exps.insert(e);
    for (QExp e : exps) {
        BigInt ca = a.coefficient(e), cb = b.coefficient(e);
        if (ca != cb) {
            std::ostringstream os;
            os << "at q^" << exp_str(e) << ": " << ca.str() << " vs " << cb.str();
            return os.str();
        }
    }
    return "";
}

int implied_r(Model model, const FamilyParams& fp) {
    if (model == Model::Parafermion) return *fp.c == fp.b + 1 ? 0 : 1;
    return std::min(fp.b, *fp.c);
}

}  // namespace

LaurentPoly compute_gf(Model model, Method method, const FamilyParams& family) {
    family.validate();
    if (!family.c) throw std::invalid_argument("family needs c");
    const int pp = family.p_prime, a = family.a, b = family.b, c = *family.c, L = family.L;
    switch (method) {
        case Method::Brute:
            return gf(family, model == Model::Abf ? WeightKind::IIINormalized : WeightKind::Alt);
        case Method::Bosonic: {
            LaurentPoly chi = bosonic_chi(pp, a, b, c, L);
            return model == Model::Abf ? chi : dual(chi, L, a, b);
        }
        case Method::Fermionic1:
            return model == Model::Abf ? fermionic_abf(pp, a, b, c, L, 1)
                                       : fermionic_para(pp, a, b, c, L, 1);
        case Method::Fermionic2:
            return model == Model::Abf ? fermionic_abf(pp, a, b, c, L, 2)
                                       : fermionic_para(pp, a, b, c, L, 2);
        case Method::Recursion: {
            // chi^{1,p'}_{a,b,c}(L) = sum_m chi^{1,p'}_{a,b,e,f}(L,m), f per c
            int f = c == b + 1 ? 0 : 1;
            int e = 0;
            LaurentPoly sum;
            for (int m = (L + e + f) % 2; m <= L + 1; m += 2)
                sum += chi_by_recursion(pp, a, b, e, f, L, m);
            return model == Model::Parafermion ? sum : dual(sum, L, a, b);
        }
        case Method::Dfunction: {
            if (L < std::abs(a - b)) return LaurentPoly();  // family is empty
            int N = (L - a + b) / 2, M = (L + a - b) / 2;
            int r = implied_r(model, family);
            int alpha = model == Model::Parafermion ? 1 - r : pp - r - 1;
            return d_function(pp, a, N, M, alpha, r);
        }
    }
    throw std::invalid_argument("unknown method");
}

int run_verify(const SweepConfig& config, std::ostream& out) {
    config.validate();
    struct Job {
        FamilyParams family;
        Model model;
    };
    std::vector<Job> jobs;
    for (const auto& fp : sweep_families(config))
        for (Model model : config.models) jobs.push_back({fp, model});

    std::vector<LineResult> results;
    run_jobs(jobs, config.workers, results, [&](const Job& job, std::size_t index) {
        LineResult r;
        r.family = job.family;
        r.label = to_string(job.model);
        std::vector<std::pair<Method, LaurentPoly>> polys;
        for (Method method : config.methods) {
            LaurentPoly p = compute_gf(job.model, method, job.family);
            if (config.corrupt_method && *config.corrupt_method == method &&
                static_cast<std::size_t>(config.corrupt_index) == index) {
                QExp where = p.is_zero() ? QExp(0) : p.terms().begin()->first;
                p.add_term(where, 1);
            }
            polys.emplace_back(method, std::move(p));
        }
        for (std::size_t i = 1; i < polys.size(); ++i) {
            if (polys[i].second != polys[0].second) {
                r.pass = false;
                std::ostringstream os;
                os << "[" << to_string(polys[0].first) << "!=" << to_string(polys[i].first)
                   << " " << first_discrepancy(polys[0].second, polys[i].second) << "]";
                r.detail = os.str();
                break;
            }
        }
        return r;
    });
    write_report(config, results, out);
    return std::any_of(results.begin(), results.end(), [](const LineResult& r) { return !r.pass; })
               ? 1
               : 0;
}

int run_bijection(const SweepConfig& config, std::ostream& out) {
    config.validate();
    struct Job {
        FamilyParams family;
        Model model;
    };
    std::vector<Job> jobs;
    for (const auto& fp : sweep_families(config))
        for (Model model : config.models) jobs.push_back({fp, model});

    std::vector<LineResult> results;
    run_jobs(jobs, config.workers, results, [&](const Job& job, std::size_t) {
        LineResult r;
        r.family = job.family;
        r.label = to_string(job.model);
        const auto& fp = job.family;
        try {
            std::set<Partition> images;
            LaurentPoly image_gf;
            bool ok = true;
            std::string detail;
            enumerate(fp, [&](const Path& h) {
                if (!ok) return;
                Partition mu = path_to_partition(
                    h, job.model == Model::Abf ? BijectionModel::Abf
                                               : BijectionModel::Parafermion);
                std::int64_t want = job.model == Model::Abf ? weight_iii_normalized(h)
                                                            : weight_alt(h);
                if (mu.weight() != want) {
                    ok = false;
                    detail = "[weight not preserved]";
                    return;
                }
                if (!images.insert(mu).second) {
                    ok = false;
                    detail = "[not injective]";
                    return;
                }
                image_gf.add_term(QExp::from_int(mu.weight()), 1);
            });
            if (ok) {
                LaurentPoly want = compute_gf(job.model, Method::Dfunction, fp);
                if (image_gf != want) {
                    ok = false;
                    detail = "[image != d_function " + first_discrepancy(image_gf, want) + "]";
                }
            }
            r.pass = ok;
            r.detail = detail;
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = std::string("[error: ") + ex.what() + "]";
        }
        return r;
    });
    write_report(config, results, out);
    return std::any_of(results.begin(), results.end(), [](const LineResult& r) { return !r.pass; })
               ? 1
               : 0;
}

int run_mn(const SweepConfig& config, std::ostream& out) {
    config.validate();
    struct Job {
        FamilyParams family;  // c implied by the shared f-sequence
        int system;
    };
    std::vector<Job> jobs;
    for (int pp : config.p_primes) {
        for (int a = 1; a <= pp - 1; ++a) {
            for (int b = 1; b <= pp - 1; ++b) {
                int c = b > 1 ? b - 1 : b + 1;
                if (c > pp - 1) continue;  // p' = 2 only
                int lo = config.exact_L ? *config.exact_L : 0;
                int hi = config.exact_L ? *config.exact_L : config.max_L;
                for (int L = lo; L <= hi; ++L) {
                    if ((L + a - b) % 2 != 0) continue;
                    for (int system : config.systems)
                        jobs.push_back({{pp, a, b, c, L}, system});
                }
            }
        }
    }

    std::vector<LineResult> results;
    run_jobs(jobs, config.workers, results, [&](const Job& job, std::size_t) {
        LineResult r;
        r.family = job.family;
        r.label = "system=" + std::to_string(job.system);
        FamilyParams open = job.family;
        open.c.reset();
        try {
            bool ok = true;
            std::string detail;
            enumerate(open, [&](const Path& h) {
                if (!ok) return;
                MnSystem mn = particle_content(h, job.system);
                if (!mn.verified) {
                    ok = false;
                    std::ostringstream os;
                    os << "[relation fails for path";
                    for (int x : h.heights) os << " " << x;
                    os << "]";
                    detail = os.str();
                }
            });
            r.pass = ok;
            r.detail = detail;
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = std::string("[error: ") + ex.what() + "]";
        }
        return r;
    });
    write_report(config, results, out);
    return std::any_of(results.begin(), results.end(), [](const LineResult& r) { return !r.pass; })
               ? 1
               : 0;
}

int run_fixture(const std::string& name, std::ostream& out) {
    if (name != "fig1") throw std::invalid_argument("unknown fixture: " + name);
    Path h;
    h.p_prime = 6;
    h.heights = {3, 4, 5, 4, 5, 4, 3, 2, 3, 2, 1, 2};
    h.c = 3;
    out << "path:";
    for (int x : h.heights) out << " " << x;
    out << "\nc: " << *h.c << "\nweight: " << weight_alt(h) << "\n";
    for (int e : {0, 1}) {
        for (int f : {0, 1}) {
            StrikingSequence s = striking_of(h, e, f);
            out << "striking (e=" << e << ",f=" << f << "): (";
            for (int i = 0; i < s.run_count(); ++i) out << (i ? "," : "") << s.w[i];
            out << ")  m=" << s.m_value() << "  wt=" << s.weight() << "\n";
        }
    }
    return 0;
}

}  // namespace rsos
