#include "cocirc/scanner.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>
#include <set>

#include "cocirc/parallel.hpp"

namespace cocirc {

namespace {

template <typename Word>
Word canonical(const Word& word) {
    Word best = word;
    Word rotated = word;
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t r = 0; r < word.size(); ++r) {
            std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
            if (rotated > best) best = rotated;
        }
        std::reverse(rotated.begin(), rotated.end());
    }
    return best;
}

}  // namespace

std::string canonical_form(const std::string& word) { return canonical(word); }

std::vector<double> canonical_form(const std::vector<double>& word) { return canonical(word); }

ArrangementPattern ArrangementPattern::from_word(const std::string& word) {
    ArrangementPattern p;
    p.n_total = word.size();
    p.canonical_form = cocirc::canonical_form(word);
    for (std::size_t i = 0; i < word.size(); ++i)
        if (p.canonical_form[i] == '1') p.special_positions.push_back(i);
    if (p.special_positions.size() == 2) {
        p.antipodal = 2 * (p.special_positions[1] - p.special_positions[0]) == p.n_total;
    }
    return p;
}

std::vector<ArrangementPattern> enumerate_two_unequal(std::size_t n_total) {
    if (n_total < 4) throw InvalidArgument("two_unequal families need n_total >= 4");
    return enumerate_two_groups(n_total, 2);
}

std::vector<ArrangementPattern> enumerate_two_groups(std::size_t n_total, std::size_t k) {
    if (n_total < 2 || n_total > 30) throw InvalidArgument("n_total must be in [2, 30]");
    if (k < 1 || k >= n_total) throw InvalidArgument("group size k must satisfy 1 <= k <= n_total - 1");

    std::set<std::string, std::greater<>> forms;
    std::string word(n_total - k, '0');
    word.append(k, '1');
    do {
        forms.insert(canonical_form(word));
    } while (std::next_permutation(word.begin(), word.end()));

    std::vector<ArrangementPattern> out;
    for (const auto& w : forms) out.push_back(ArrangementPattern::from_word(w));
    return out;
}

std::vector<std::size_t> place_pattern(const ArrangementPattern& pattern) {
    const std::size_t n = pattern.n_total;
    const std::size_t last = pattern.special_positions.back();
    std::vector<std::size_t> out;
    for (std::size_t p : pattern.special_positions) out.push_back((p + n - 1 - last) % n);
    std::sort(out.begin(), out.end());
    return out;
}

FamilySpec FamilySpec::two_unequal(std::size_t n_total, double m_j, double m_n) {
    return {FamilyKind::two_unequal, n_total, 2, {m_j, m_n}};
}

FamilySpec FamilySpec::two_groups(std::size_t n_total, std::size_t k, double m) {
    return {FamilyKind::two_groups, n_total, k, {1.0, m}};
}

void FamilySpec::validate() const {
    auto positive = [](double x) { return x > 0.0 && std::isfinite(x); };
    if (!positive(values.first) || !positive(values.second)) throw InvalidArgument("family masses must be positive");
    if (kind == FamilyKind::two_unequal) {
        if (n_total < 4) throw InvalidArgument("two_unequal needs n_total >= 4");
        if (values.first == 1.0 || values.second == 1.0)
            throw InvalidArgument("two_unequal special masses must both differ from 1");
    } else {
        if (n_total < 2) throw InvalidArgument("two_groups needs n_total >= 2");
        if (values.second == 1.0) throw InvalidArgument("two_groups second-group mass must differ from 1");
        if (k < 1 || 2 * k > n_total) throw InvalidArgument("two_groups needs 1 <= k <= n_total - k");
    }
}

std::vector<ArrangementInput> family_arrangements(const FamilySpec& spec) {
    spec.validate();
    const auto patterns = spec.kind == FamilyKind::two_unequal ? enumerate_two_unequal(spec.n_total)
                                                               : enumerate_two_groups(spec.n_total, spec.k);
    std::vector<ArrangementInput> out;
    for (const auto& pattern : patterns) {
        const auto positions = place_pattern(pattern);
        std::vector<std::vector<double>> candidates;
        if (spec.kind == FamilyKind::two_unequal) {
            for (auto [first, second] : {spec.values, std::pair{spec.values.second, spec.values.first}}) {
                std::vector<double> m(spec.n_total, 1.0);
                m[positions[0]] = first;
                m[positions[1]] = second;
                candidates.push_back(std::move(m));
            }
        } else {
            std::vector<double> m(spec.n_total, 1.0);
            for (std::size_t p : positions) m[p] = spec.values.second;
            candidates.push_back(std::move(m));
        }

        std::set<std::vector<double>> seen;
        for (auto& m : candidates) {
            if (seen.insert(canonical_form(m)).second) out.push_back({pattern, positions, MassVector(std::move(m))});
        }
    }
    return out;
}

namespace {

ScanResult assemble(const FamilySpec& spec, Alpha alpha, std::vector<ArrangementInput>& inputs,
                    std::vector<std::optional<CertificateReport>>& reports) {
    ScanResult result{spec, alpha.value(), {}, {}};
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        switch (reports[i]->verdict) {
            case Verdict::excluded: ++result.summary.excluded; break;
            case Verdict::not_excluded: ++result.summary.not_excluded; break;
            case Verdict::inconclusive: ++result.summary.inconclusive; break;
        }
        result.rows.push_back({std::move(inputs[i].pattern), std::move(inputs[i].positions), std::move(*reports[i])});
    }
    return result;
}

}  // namespace

ScanResult scan_family(const FamilySpec& spec, Alpha alpha, const MinimizerOptions& opts) {
    auto inputs = family_arrangements(spec);
    std::vector<std::optional<CertificateReport>> reports(inputs.size());
    std::vector<std::exception_ptr> errors(inputs.size());
    const long long count = static_cast<long long>(inputs.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
    for (long long i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        try {
            reports[idx] = certify(inputs[idx].masses, alpha, opts);
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return assemble(spec, alpha, inputs, reports);
}

ScanResult scan_family_serial(const FamilySpec& spec, Alpha alpha, const MinimizerOptions& opts) {
    auto inputs = family_arrangements(spec);
    std::vector<std::optional<CertificateReport>> reports(inputs.size());
    for (std::size_t i = 0; i < inputs.size(); ++i) reports[i] = certify(inputs[i].masses, alpha, opts);
    return assemble(spec, alpha, inputs, reports);
}

}  // namespace cocirc
