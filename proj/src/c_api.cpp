#include "flagcoh/flagcoh.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "flagcoh/error.hpp"
#include "flagcoh/json_io.hpp"
#include "flagcoh/presentation.hpp"
#include "flagcoh/reports.hpp"

struct fc_quotient {
    std::shared_ptr<const flagcoh::GradedQuotient> q;
    std::unique_ptr<flagcoh::CertifiedBasis> basis;
};

namespace {

using namespace flagcoh;
using nlohmann::json;

thread_local std::string last_error;

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::string text(const char* s) {
    if (!s) throw InvalidArgument("null string argument");
    return s;
}

template <class T>
void require(T* p) {
    if (!p) throw InvalidArgument("null output argument");
}

Partition parse_lambda(const char* s) { return Partition(parse_int_list(text(s))); }
Composition parse_mu(const char* s) { return Composition(parse_int_list(text(s))); }

Tableau parse_member(const Composition& mu, const char* s) {
    Tableau t = Tableau::parse(text(s));
    if (!t.is_column_strict()) throw InvalidArgument("tableau " + t.to_string() + " is not column-strict");
    if (t.content(mu.length()) != mu.parts())
        throw InvalidArgument("tableau " + t.to_string() + " does not have content " + mu.to_string());
    return t;
}

template <class F>
fc_status guarded(F&& f) {
    try {
        last_error.clear();
        return f();
    } catch (const VerificationError& e) {
        last_error = e.witness();
        return FC_VERIFICATION_FAILED;
    } catch (const InvalidArgument& e) {
        last_error = e.what();
        return FC_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        last_error = e.what();
        return FC_INTERNAL_ERROR;
    } catch (...) {
        last_error = "unknown error";
        return FC_INTERNAL_ERROR;
    }
}

fc_status emit(const json& j, char** out) {
    *out = duplicate(j.dump());
    return FC_OK;
}

CertifiedBasis& certified(fc_quotient* q) {
    if (!q->basis) q->basis = std::make_unique<CertifiedBasis>(q->q);
    return *q->basis;
}

}  // namespace

extern "C" {

const char* fc_version(void) { return "1.0.0"; }

const char* fc_last_error(void) { return last_error.c_str(); }

void fc_string_free(char* s) { std::free(s); }

fc_status fc_enumerate(const char* lambda, const char* mu, int semistandard, char** out_json) {
    return guarded([&] {
        require(out_json);
        const Partition l = parse_lambda(lambda);
        const Composition m = parse_mu(mu);
        check_pair(l, m);
        json arr = json::array();
        for (const auto& t : semistandard ? semistandard_tableaux(l, m) : column_strict_tableaux(l, m))
            arr.push_back(io::to_json(t));
        return emit(arr, out_json);
    });
}

fc_status fc_tableau_degree(const char* mu, const char* tableau, int* out_degree) {
    return guarded([&] {
        require(out_degree);
        const Composition m = parse_mu(mu);
        *out_degree = tableau_degree(parse_member(m, tableau), m);
        return FC_OK;
    });
}

fc_status fc_reduce_tableau(const char* mu, const char* tableau, char** out_json) {
    return guarded([&] {
        require(out_json);
        const Composition m = parse_mu(mu);
        const Tableau t = parse_member(m, tableau);
        const Reduction r = reduce_tableau(t, m);
        return emit({{"shape", io::to_json(t.shape())},
                     {"columns", r.columns},
                     {"gamma", io::to_json(r.gamma)},
                     {"reduced", io::to_json(r.reduced)},
                     {"reduced_shape", io::to_json(r.reduced_shape)},
                     {"reduced_content", io::to_json(r.reduced_content)}},
                    out_json);
    });
}

fc_status fc_straighten(const char* mu, const char* tableau, char** out_json) {
    return guarded([&] {
        require(out_json);
        const Composition m = parse_mu(mu);
        return emit(io::to_json(straighten(parse_member(m, tableau), m)), out_json);
    });
}

fc_status fc_h_of_tableau(const char* mu, const char* tableau, char** out_json) {
    return guarded([&] {
        require(out_json);
        const Composition m = parse_mu(mu);
        return emit(io::to_json(h_of_tableau(parse_member(m, tableau), m)), out_json);
    });
}

fc_status fc_betti(const char* lambda, const char* mu, char** out_json) {
    return guarded([&] {
        require(out_json);
        return emit(io::to_json(betti(parse_lambda(lambda), parse_mu(mu))), out_json);
    });
}

fc_status fc_components(const char* lambda, const char* mu, char** out_json) {
    return guarded([&] {
        require(out_json);
        json arr = json::array();
        for (const auto& c : components(parse_lambda(lambda), parse_mu(mu))) arr.push_back(io::to_json(c));
        return emit(arr, out_json);
    });
}

fc_status fc_poset(const char* lambda, const char* mu, int dot, char** out) {
    return guarded([&] {
        require(out);
        const PosetExport p = poset_export(parse_lambda(lambda), parse_mu(mu));
        if (dot) {
            *out = duplicate(p.dot);
            return FC_OK;
        }
        return emit(io::to_json(p), out);
    });
}

fc_status fc_quotient_build(const char* lambda, const char* mu, fc_family family, fc_quotient** out) {
    return guarded([&] {
        require(out);
        *out = nullptr;
        if (family != FC_FAMILY_H && family != FC_FAMILY_E) throw InvalidArgument("unknown generator family");
        auto handle = std::make_unique<fc_quotient>();
        handle->q = GradedQuotient::build(parse_lambda(lambda), parse_mu(mu),
                                          family == FC_FAMILY_H ? Family::H : Family::E);
        *out = handle.release();
        return FC_OK;
    });
}

void fc_quotient_free(fc_quotient* q) { delete q; }

fc_status fc_quotient_hilbert(const fc_quotient* q, char** out_json) {
    return guarded([&] {
        require(q);
        require(out_json);
        return emit(io::to_json(q->q->hilbert()), out_json);
    });
}

fc_status fc_quotient_total_dimension(const fc_quotient* q, long* out) {
    return guarded([&] {
        require(q);
        require(out);
        *out = q->q->total_dimension();
        return FC_OK;
    });
}

fc_status fc_quotient_generators(const fc_quotient* q, char** out_json) {
    return guarded([&] {
        require(q);
        require(out_json);
        const auto& g = *q->q;
        json arr = json::array();
        for (const auto& e : generators(g.lambda(), g.mu(), g.family(), 2 * g.max_degree()))
            arr.push_back({{"blocks", e.blocks}, {"r", e.r}, {"poly", io::to_json(e.poly)}});
        return emit(arr, out_json);
    });
}

fc_status fc_quotient_certify(fc_quotient* q, char** out_json) {
    return guarded([&] {
        require(q);
        require(out_json);
        const BasisCertificate cert = certify_basis(*q->q);
        *out_json = duplicate(io::quotient_report(*q->q, cert).dump());
        if (!cert.certified) {
            last_error = cert.witness;
            return FC_VERIFICATION_FAILED;
        }
        return FC_OK;
    });
}

fc_status fc_quotient_normal_form(fc_quotient* q, const char* polynomial, char** out_json) {
    return guarded([&] {
        require(q);
        require(out_json);
        const Polynomial p = Polynomial::parse(text(polynomial), q->q->mu().size());
        json arr = json::array();
        for (const auto& c : certified(q).normal_form(p)) arr.push_back(io::rational_text(c));
        return emit(arr, out_json);
    });
}

fc_status fc_quotient_structure_constants(fc_quotient* q, char** out_json) {
    return guarded([&] {
        require(q);
        require(out_json);
        return emit(io::to_json(certified(q).structure_constants()), out_json);
    });
}

fc_status fc_rel_equivalence(const char* lambda, const char* mu, int* out_equal) {
    return guarded([&] {
        require(out_equal);
        *out_equal = rel_equivalence(parse_lambda(lambda), parse_mu(mu)) ? 1 : 0;
        return FC_OK;
    });
}

fc_status fc_transfer(const char* lambda, const char* mu, char** out_json) {
    return guarded([&] {
        require(out_json);
        const TransferReport r = anti_invariant_transfer(parse_lambda(lambda), parse_mu(mu));
        *out_json = duplicate(io::to_json(r).dump());
        if (!r.passed) {
            last_error = r.witness;
            return FC_VERIFICATION_FAILED;
        }
        return FC_OK;
    });
}

fc_status fc_verify(const char* lambda, const char* mu, char** out_json) {
    return guarded([&] {
        require(out_json);
        const Partition l = parse_lambda(lambda);
        const Composition m = parse_mu(mu);
        const auto h = GradedQuotient::build(l, m, Family::H);
        const auto e = GradedQuotient::build(l, m, Family::E);
        const BasisCertificate cert = certify_basis(*h);
        const HilbertSeries b = betti(l, m);
        const bool same = h->max_degree() == e->max_degree() && h->same_ideal(*e);
        const bool betti_ok = b == h->hilbert();
        const bool passed = cert.certified && same && betti_ok;
        json report = {{"lambda", l.padded(m.length())},
                       {"mu", io::to_json(m)},
                       {"hilbert", io::to_json(h->hilbert())},
                       {"betti", io::to_json(b)},
                       {"certified", cert.certified},
                       {"rel_equivalence", same},
                       {"betti_matches_hilbert", betti_ok},
                       {"passed", passed}};
        if (!cert.certified) report["witness"] = json::parse(cert.witness);
        *out_json = duplicate(report.dump());
        if (!passed) {
            last_error = cert.certified ? report.dump() : cert.witness;
            return FC_VERIFICATION_FAILED;
        }
        return FC_OK;
    });
}

}  // extern "C"
