// Command line front end for the coinvariant algebra library.
//
// Exit codes: 0 success, 1 usage or input errors, 2 resource cap hit,
// 3 a verification or certification check failed.
#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>

#include "coinv/errors.hpp"
#include "coinv/gs.hpp"
#include "coinv/oracle.hpp"
#include "coinv/rewrite.hpp"
#include "coinv/symfunc.hpp"
#include "coinv/text.hpp"
#include "coinv/words.hpp"

using nlohmann::json;
using namespace coinv;

namespace {

struct Common {
    int n = 3, k = 2, r = 1;
    std::string variant = "S";
    std::string format = "text";
};

Variant variant_of(const std::string& s) {
    if (s == "R" || s == "r") return Variant::R;
    if (s == "S" || s == "s") return Variant::S;
    throw CLI::ValidationError("--variant must be R or S");
}

Setting setting_of(const std::string& s) {
    if (s == "x") return Setting::X;
    if (s == "y") return Setting::Y;
    throw CLI::ValidationError("--setting must be x or y");
}

void add_common(CLI::App* sub, Common& c, bool with_variant = true) {
    sub->add_option("-n,--letters", c.n, "ground set size")->capture_default_str();
    sub->add_option("-k,--blocks", c.k, "number of blocks")->capture_default_str();
    sub->add_option("-r,--colors", c.r, "number of colors")->capture_default_str();
    if (with_variant)
        sub->add_option("--variant", c.variant, "quotient flavor: S (set partitions) or R (faces)")
            ->capture_default_str();
    sub->add_option("--format", c.format, "output format: text or json")->capture_default_str();
}

int run_enumerate(const Common& c, const std::string& kind, long limit) {
    json items = json::array();
    long total = 0;
    auto emit = [&](json j) {
        ++total;
        if (limit < 0 || total <= limit) items.push_back(std::move(j));
    };
    if (kind == "words") {
        for_each_word(c.n, c.r, [&](const Word& w) {
            emit({{"word", to_string(w)}, {"maj", maj(w)}, {"des", des(w)}});
        });
    } else if (kind == "osps") {
        for_each_osp(c.n, c.k, c.r, [&](const Osp& p) {
            emit({{"osp", to_string(p)},
                  {"blocks", blocks_to_string(osp_blocks(p, c.k))},
                  {"comaj", comaj_osp(p, c.k)},
                  {"monomial", to_string(tilde_b_osp(p, c.k))}});
        });
        if (total != count_osps(c.n, c.k, c.r)) throw certification_error("count mismatch");
    } else if (kind == "faces") {
        for_each_face(c.n, c.k, c.r, [&](const Face& f) {
            emit({{"face", to_string(f)},
                  {"comaj", comaj_face(f, c.k)},
                  {"monomial", to_string(tilde_b_face(f, c.k))}});
        });
        if (total != count_faces(c.n, c.k, c.r)) throw certification_error("count mismatch");
    } else {
        throw CLI::ValidationError("--kind must be words, osps or faces");
    }
    if (c.format == "json") {
        std::cout << json{{"kind", kind}, {"count", total}, {"items", items}}.dump(2) << "\n";
    } else {
        for (const auto& it : items) {
            bool first = true;
            for (const auto& [key, val] : it.items()) {
                std::cout << (first ? "" : "  ") << key << "=" << (val.is_string() ? val.get<std::string>() : val.dump());
                first = false;
            }
            std::cout << "\n";
        }
        if (limit >= 0 && total > limit) std::cout << "... (" << total - limit << " more)\n";
        std::cout << "count: " << total << "\n";
    }
    return 0;
}

int run_stats(const Common& c, const std::string& word_s, const std::string& osp_s,
              const std::string& face_s) {
    json out;
    if (!word_s.empty()) {
        Word w = parse_word(word_s, c.n, c.r);
        out = {{"word", to_string(w)},
               {"des", des(w)},
               {"descents", descent_set(w)},
               {"maj", maj(w)},
               {"tilde_b", to_string(tilde_b(w))},
               {"b", to_string(b_word(w))}};
    } else if (!osp_s.empty()) {
        Osp p = parse_osp(osp_s, c.n, c.r);
        out = {{"osp", to_string(p)},
               {"blocks", blocks_to_string(osp_blocks(p, c.k))},
               {"comaj", comaj_osp(p, c.k)},
               {"tilde_b", to_string(tilde_b_osp(p, c.k))},
               {"b", to_string(b_osp(p, c.k))}};
        if (c.r == 1) out["hrs_maj"] = hrs_maj(p, c.k);
    } else if (!face_s.empty()) {
        Face f = parse_face(face_s, c.n, c.r);
        out = {{"face", to_string(f)},
               {"comaj", comaj_face(f, c.k)},
               {"tilde_b", to_string(tilde_b_face(f, c.k))},
               {"b", to_string(b_face(f, c.k))}};
    } else {
        throw CLI::ValidationError("pass one of --word, --osp, --face");
    }
    if (c.format == "json")
        std::cout << out.dump(2) << "\n";
    else
        for (const auto& [key, val] : out.items())
            std::cout << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump())
                      << "\n";
    return 0;
}

int run_basis(const Common& c) {
    Variant v = variant_of(c.variant);
    auto basis = enumerate_basis(c.n, c.k, c.r, v);
    if (c.format == "json") {
        json items = json::array();
        for (const auto& b : basis)
            items.push_back({{"monomial", to_string(b)},
                             {"degree", b.degree()},
                             {"transferred_degree", b.tilde_degree()},
                             {"x_image", to_string(transfer_phi(b, c.n))}});
        std::cout << json{{"count", basis.size()}, {"items", items}}.dump(2) << "\n";
    } else {
        for (const auto& b : basis)
            std::cout << to_string(b) << "  deg=" << b.degree() << "  tdeg=" << b.tilde_degree()
                      << "  x=" << to_string(transfer_phi(b, c.n)) << "\n";
        std::cout << "count: " << basis.size() << "\n";
    }
    return 0;
}

int run_hilbert(const Common& c, const std::string& setting_s, const std::string& grading_s,
                int cap_degree, long cap_slice) {
    Variant v = variant_of(c.variant);
    Setting s = setting_of(setting_s);
    YGrading g = grading_s == "natural" ? YGrading::Natural : YGrading::Transferred;
    Caps caps;
    if (cap_degree > 0) caps.max_degree = cap_degree;
    if (cap_slice > 0) caps.max_slice = cap_slice;
    HilbertReport rep = hilbert_oracle(c.n, c.k, c.r, v, s, g, caps);
    auto hist = hilbert_combinatorial(c.n, c.k, c.r, v);
    json rows = json::array();
    bool match = true;
    size_t top = std::max(rep.rows.size(), hist.size());
    for (size_t d = 0; d < top; ++d) {
        long q = d < rep.rows.size() ? rep.rows[d].quotient_dim : 0;
        long h = d < hist.size() ? hist[d] : 0;
        if (s == Setting::X || g == YGrading::Transferred)
            match = match && q == h;
        json row{{"degree", d}, {"quotient", q}};
        if (d < rep.rows.size()) {
            row["space"] = rep.rows[d].space_dim;
            row["ideal"] = rep.rows[d].ideal_dim;
        }
        if (s == Setting::X || g == YGrading::Transferred) row["statistic"] = h;
        rows.push_back(row);
    }
    bool compared = s == Setting::X || g == YGrading::Transferred;
    if (c.format == "json") {
        json out{{"rows", rows}, {"total", rep.total}};
        if (compared) out["matches_statistic"] = match;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& row : rows) {
            std::cout << "deg " << row["degree"] << ": quotient " << row["quotient"];
            if (row.contains("space"))
                std::cout << "  (space " << row["space"] << ", ideal " << row["ideal"] << ")";
            if (row.contains("statistic")) std::cout << "  statistic " << row["statistic"];
            std::cout << "\n";
        }
        std::cout << "total: " << rep.total << "\n";
        if (compared) std::cout << "matches statistic: " << (match ? "yes" : "no") << "\n";
    }
    return compared && !match ? 3 : 0;
}

std::string qpoly_str(const QPoly& p) {
    if (p.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0 || p[i] != 1) out += std::to_string(p[i]);
        if (i == 1) out += i == 1 && p[i] != 1 ? "*q" : "q";
        if (i > 1) out += (p[i] != 1 ? "*q^" : "q^") + std::to_string(i);
    }
    return out;
}

int run_frobenius(const Common& c) {
    if (c.r != 1) throw CLI::ValidationError("frobenius requires --colors 1");
    QSchur direct = frobenius_q_formula_S(c.n, c.k);
    QSchur graded = specialize_t_to_q(multigraded_frobenius_S(c.n, c.k));
    bool match = direct == graded;
    if (c.format == "json") {
        json items = json::array();
        for (const auto& [lam, p] : direct)
            items.push_back({{"shape", partition_to_string(lam)},
                             {"coefficients", p},
                             {"dimension", schur_dim(lam)}});
        std::cout << json{{"schur", items}, {"specialization_consistent", match}}.dump(2) << "\n";
    } else {
        for (const auto& [lam, p] : direct)
            std::cout << "s" << partition_to_string(lam) << ": " << qpoly_str(p) << "\n";
        std::cout << "specialization consistent: " << (match ? "yes" : "no") << "\n";
    }
    return match ? 0 : 3;
}

int run_rewrite(const Common& c, const std::string& mono_s, const std::string& setting_s,
                bool show_trace) {
    Variant v = variant_of(c.variant);
    json out;
    if (setting_of(setting_s) == Setting::Y) {
        YMonomial y = parse_ymonomial(mono_s);
        YReduction red = reduce_y(y, c.n, c.k, c.r, v);
        out["input"] = to_string(y);
        out["class"] = red.cls == Admissibility::admissible       ? "admissible"
                       : red.cls == Admissibility::semi_admissible ? "semi-admissible"
                                                                    : "non-admissible";
        out["normal_form"] = to_string(red.normal_form);
        if (show_trace) {
            json steps = json::array();
            for (const auto& st : red.steps)
                steps.push_back({{"from", to_string(st.from)},
                                 {"coefficient", to_string(st.coeff)},
                                 {"moved", to_string(st.moved)},
                                 {"replacement", to_string(st.replacement)}});
            out["steps"] = steps;
        }
    } else {
        XMonomial m = parse_xmonomial(mono_s, c.n);
        XStratumReduction red = reduce_x_stratum(m, c.n, c.k, c.r, v);
        out["input"] = to_string(m);
        out["class"] = red.cls == Admissibility::admissible       ? "admissible"
                       : red.cls == Admissibility::semi_admissible ? "semi-admissible"
                                                                    : "non-admissible";
        out["same_stratum"] = to_string(red.same_mu);
        out["higher_strata"] = to_string(red.higher_mu);
        out["normal_form"] = to_string(normal_form_x(m, c.n, c.k, c.r, v));
        if (show_trace) {
            json steps = json::array();
            for (const auto& st : red.steps)
                steps.push_back({{"from", to_string(st.from)},
                                 {"coefficient", to_string(st.coeff)},
                                 {"moved", to_string(st.moved)},
                                 {"replacement", to_string(st.replacement)}});
            out["steps"] = steps;
        }
    }
    if (c.format == "json")
        std::cout << out.dump(2) << "\n";
    else
        for (const auto& [key, val] : out.items())
            std::cout << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump(2))
                      << "\n";
    return 0;
}

int run_verify(const Common& c, int cap_degree, long cap_slice) {
    Variant v = variant_of(c.variant);
    Caps caps;
    if (cap_degree > 0) caps.max_degree = cap_degree;
    if (cap_slice > 0) caps.max_slice = cap_slice;
    BasisCertification cert = certify_standard_basis(c.n, c.k, c.r, v, caps);

    HilbertReport hx = hilbert_oracle(c.n, c.k, c.r, v, Setting::X, YGrading::Transferred, caps);
    HilbertReport hy = hilbert_oracle(c.n, c.k, c.r, v, Setting::Y, YGrading::Transferred, caps);
    auto hist = hilbert_combinatorial(c.n, c.k, c.r, v);
    auto series = [](const HilbertReport& h) {
        std::vector<long> out;
        for (const auto& row : h.rows) out.push_back(row.quotient_dim);
        return out;
    };
    std::vector<long> sx = series(hx), sy = series(hy);
    while (!hist.empty() && hist.back() == 0) hist.pop_back();
    bool hilbert_ok = sx == sy && sx == hist;

    json out{{"basis_size", cert.basis_size},
             {"witnesses_checked", cert.witnesses_checked},
             {"basis_certified", cert.passed},
             {"hilbert_consistent", hilbert_ok},
             {"failures", cert.failures}};
    if (c.format == "json")
        std::cout << out.dump(2) << "\n";
    else {
        std::cout << "basis size: " << cert.basis_size << "\n"
                  << "witnesses checked: " << cert.witnesses_checked << "\n"
                  << "basis certified: " << (cert.passed ? "yes" : "no") << "\n"
                  << "hilbert series consistent: " << (hilbert_ok ? "yes" : "no") << "\n";
        for (const auto& f : cert.failures) std::cout << "failure: " << f << "\n";
    }
    return cert.passed && hilbert_ok ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"statistics, bases, Hilbert series and rewriting for generalized "
                 "coinvariant algebras"};
    app.require_subcommand(1);

    Common c;
    std::string kind = "osps", setting = "y", grading = "transferred";
    std::string word_s, osp_s, face_s, mono_s;
    long limit = -1, cap_slice = 0;
    int cap_degree = 0;
    bool show_trace = false;

    auto* enumerate = app.add_subcommand("enumerate", "list words, set partitions or faces");
    add_common(enumerate, c, false);
    enumerate->add_option("--kind", kind, "words, osps or faces")->capture_default_str();
    enumerate->add_option("--limit", limit, "print at most this many items");

    auto* stats = app.add_subcommand("stats", "statistics and descent monomials of one object");
    add_common(stats, c, false);
    stats->add_option("--word", word_s, "colored word, e.g. \"2^1 1^0 3^0\"");
    stats->add_option("--osp", osp_s, "ordered set partition, e.g. \"(2^1 1^0 3^0; (1))\"");
    stats->add_option("--face", face_s, "face, e.g. \"({2}; 1^0 3^1; ())\"");

    auto* basis = app.add_subcommand("basis", "standard monomial basis of the quotient");
    add_common(basis, c);

    auto* hilbert = app.add_subcommand("hilbert", "graded dimensions against the statistic");
    add_common(hilbert, c);
    hilbert->add_option("--setting", setting, "x or y")->capture_default_str();
    hilbert->add_option("--grading", grading, "y grading: natural or transferred")
        ->capture_default_str();
    hilbert->add_option("--cap-degree", cap_degree, "degree cap");
    hilbert->add_option("--cap-slice", cap_slice, "slice size cap");

    auto* frobenius = app.add_subcommand("frobenius", "graded Schur expansion (one color)");
    add_common(frobenius, c);

    auto* rewrite = app.add_subcommand("rewrite", "normal form of a monomial in the quotient");
    add_common(rewrite, c);
    rewrite->add_option("--monomial", mono_s, "y{..}^e*.. or x1^e*..")->required();
    rewrite->add_option("--setting", setting, "x or y")->capture_default_str();
    rewrite->add_flag("--trace", show_trace, "print every rewriting step");

    auto* verify = app.add_subcommand("verify", "certify the basis and the Hilbert series");
    add_common(verify, c);
    verify->add_option("--cap-degree", cap_degree, "degree cap");
    verify->add_option("--cap-slice", cap_slice, "slice size cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage problems always exit 1
    }

    try {
        if (app.got_subcommand(enumerate)) return run_enumerate(c, kind, limit);
        if (app.got_subcommand(stats)) return run_stats(c, word_s, osp_s, face_s);
        if (app.got_subcommand(basis)) return run_basis(c);
        if (app.got_subcommand(hilbert))
            return run_hilbert(c, setting, grading, cap_degree, cap_slice);
        if (app.got_subcommand(frobenius)) return run_frobenius(c);
        if (app.got_subcommand(rewrite)) return run_rewrite(c, mono_s, setting, show_trace);
        if (app.got_subcommand(verify)) return run_verify(c, cap_degree, cap_slice);
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const certification_error& e) {
        std::cerr << "certification failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
