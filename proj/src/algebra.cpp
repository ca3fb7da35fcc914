#include "koszulkit/algebra.hpp"

#include <algorithm>

namespace koszulkit {

Metric::Metric(DenseQ m) : g(std::move(m)) {
    if (!g.is_square() || g.rows() < 2) throw InputError("metric must be square, size >= 2");
    if (!g.is_symmetric()) throw InputError("metric must be symmetric");
    g_inv = g.inverse();  // throws InputError when singular
}

Presentation Presentation::make(std::vector<std::string> names, std::uint32_t N,
                                const std::vector<TensorVector>& relators, std::string label,
                                std::optional<Metric> metric) {
    if (names.empty()) throw InputError("presentation needs at least one generator");
    Presentation p;
    p.generator_names = std::move(names);
    p.degree = N;
    p.relators = RelatorSpace(p.generator_count(), N, relators);
    const auto& dropped = p.relators.dropped_dependent();
    for (std::size_t i = 0; i < relators.size(); ++i) {
        if (std::find(dropped.begin(), dropped.end(), i) == dropped.end() &&
            !relators[i].is_zero())
            p.defining_relators.push_back(relators[i]);
    }
    p.label = std::move(label);
    p.metric = std::move(metric);
    return p;
}

Presentation dual_presentation(const Presentation& p) {
    Subspace rperp = annihilator(p.relators.space());
    std::vector<TensorVector> rel;
    rel.reserve(rperp.dim());
    for (const auto& row : rperp.basis()) {
        TensorVector v;
        v.degree = p.degree;
        v.coeffs = row;
        rel.push_back(std::move(v));
    }
    std::vector<std::string> names;
    names.reserve(p.generator_count());
    for (std::uint32_t i = 0; i < p.generator_count(); ++i)
        names.push_back("t" + std::to_string(i));
    return Presentation::make(std::move(names), p.degree, rel, p.label + "!", p.metric);
}

bool quotient_check(const RelatorSpace& sub, const RelatorSpace& quot) {
    if (sub.generator_count() != quot.generator_count())
        throw InputError("quotient_check: generator counts differ");
    if (sub.degree() < quot.degree())
        throw InputError("quotient_check: the candidate subalgebra relators must have degree >= the quotient's");
    return ideal_slice(quot, sub.degree()).contains_subspace(sub.space());
}

AlgebraConfig AlgebraConfig::defaults_for(std::uint32_t gens) {
    AlgebraConfig cfg;
    cfg.cutoff = gens <= 2 ? 10 : 8;
    std::uint32_t sc = 0;
    std::uint64_t amb = 1;
    while (sc < cfg.cutoff && amb * gens <= 4096) {
        amb *= gens;
        ++sc;
    }
    cfg.section_cutoff = std::max<std::uint32_t>(sc, 2);
    return cfg;
}

GradedAlgebra::GradedAlgebra(Presentation p)
    : GradedAlgebra(std::move(p), AlgebraConfig{}) {
    cfg_ = AlgebraConfig::defaults_for(pres_.generator_count());
    primes_ = draw_prime_pair(cfg_.seed);
}

GradedAlgebra::GradedAlgebra(Presentation p, AlgebraConfig cfg)
    : pres_(std::move(p)), cfg_(cfg), primes_(draw_prime_pair(cfg.seed)) {}

std::uint32_t GradedAlgebra::exact_ambient_guard() const {
    return tensor_dim(gens(), cfg_.section_cutoff);
}

IdealTower<ZpOps>& GradedAlgebra::modular_tower_locked(int which, std::uint32_t level) {
    auto& slot = mod_towers_[which];
    if (!slot) {
        std::uint64_t p = which == 0 ? primes_.p1 : primes_.p2;
        ZpOps ops(p);
        std::vector<SparseRow<ZpOps>> rows;
        for (const auto& r : pres_.relators.space().basis()) rows.push_back(convert_row(ops, r));
        slot = std::make_unique<IdealTower<ZpOps>>(ops, gens(), pres_.degree, std::move(rows),
                                                   cfg_.cutoff);
    }
    slot->ensure(level);
    return *slot;
}

IdealTower<QOps>& GradedAlgebra::exact_tower_locked(std::uint32_t level) {
    if (!exact_tower_) {
        std::vector<SparseRow<QOps>> rows;
        for (const auto& r : pres_.relators.space().basis()) rows.push_back(r);
        exact_tower_ = std::make_unique<IdealTower<QOps>>(QOps{}, gens(), pres_.degree,
                                                          std::move(rows), cfg_.section_cutoff);
    }
    exact_tower_->ensure(level);
    return *exact_tower_;
}

IdealTower<ZpOps>& GradedAlgebra::modular_tower(int which, std::uint32_t level) {
    std::lock_guard lk(mu_);
    return modular_tower_locked(which, level);
}

IdealTower<QOps>& GradedAlgebra::exact_tower(std::uint32_t level) {
    std::lock_guard lk(mu_);
    return exact_tower_locked(level);
}

std::uint64_t GradedAlgebra::graded_dim_locked(std::uint32_t n) {
    if (n > cfg_.cutoff)
        throw ResourceLimit("graded_dim: degree " + std::to_string(n) +
                            " exceeds the cutoff " + std::to_string(cfg_.cutoff));
    if (auto it = dims_.find(n); it != dims_.end()) return it->second.first;
    std::uint64_t gn = tensor_dim(gens(), n);
    std::uint64_t value = 0;
    std::string path;
    switch (cfg_.strategy) {
        case AlgebraConfig::Strategy::modular: {
            value = gn - modular_tower_locked(0, n).ideal_dim(n);
            path = "modular(" + std::to_string(primes_.p1) + ")";
            break;
        }
        case AlgebraConfig::Strategy::exact: {
            value = gn - exact_tower_locked(n).ideal_dim(n);
            path = "exact";
            break;
        }
        case AlgebraConfig::Strategy::verify: {
            bool ok = false;
            std::uint64_t d1 = 0;
            try {
                d1 = modular_tower_locked(0, n).ideal_dim(n);
                std::uint64_t d2 = modular_tower_locked(1, n).ideal_dim(n);
                ok = d1 == d2;
            } catch (const ModularDegeneracy&) {
                ok = false;
            }
            if (ok) {
                value = gn - d1;
                path = "modular(" + std::to_string(primes_.p1) + "," +
                       std::to_string(primes_.p2) + ")";
            } else {
                value = gn - exact_tower_locked(n).ideal_dim(n);
                path = "exact";
            }
            break;
        }
    }
    dims_[n] = {value, path};
    return value;
}

std::uint64_t GradedAlgebra::graded_dim(std::uint32_t n) {
    std::lock_guard lk(mu_);
    return graded_dim_locked(n);
}

std::string GradedAlgebra::dim_path(std::uint32_t n) {
    std::lock_guard lk(mu_);
    graded_dim_locked(n);
    return dims_.at(n).second;
}

std::uint64_t GradedAlgebra::ideal_dim(std::uint32_t n) {
    std::lock_guard lk(mu_);
    return tensor_dim(gens(), n) - graded_dim_locked(n);
}

const std::vector<std::uint32_t>& GradedAlgebra::standard_words_locked(std::uint32_t n) {
    if (auto it = std_words_.find(n); it != std_words_.end()) return it->second;
    auto& tower = exact_tower_locked(n);
    std::vector<std::uint32_t> pivots = tower.pivot_cols(n);
    std::vector<std::uint32_t> words;
    std::uint32_t ambient = tensor_dim(gens(), n);
    words.reserve(ambient - pivots.size());
    std::size_t pi = 0;
    for (std::uint32_t c = 0; c < ambient; ++c) {
        if (pi < pivots.size() && pivots[pi] == c)
            ++pi;
        else
            words.push_back(c);
    }
    return std_words_.emplace(n, std::move(words)).first->second;
}

const std::vector<std::uint32_t>& GradedAlgebra::standard_words(std::uint32_t n) {
    std::lock_guard lk(mu_);
    return standard_words_locked(n);
}

const GradedComponent& GradedAlgebra::standard_section(std::uint32_t n) {
    std::lock_guard lk(mu_);
    if (auto it = sections_.find(n); it != sections_.end()) return it->second;
    auto& tower = exact_tower_locked(n);
    std::uint32_t ambient = tensor_dim(gens(), n);
    GradedComponent comp;
    comp.degree = n;
    comp.standard_words = standard_words_locked(n);
    comp.dim = comp.standard_words.size();
    // canonical RREF rows of I_n: e_c - nf(e_c) per pivot column c
    std::vector<SparseVecQ> rows;
    std::vector<std::uint32_t> pivots = tower.pivot_cols(n);
    rows.reserve(pivots.size());
    for (std::uint32_t c : pivots) {
        SparseRow<QOps> nf = tower.reduce(n, {{c, mpq_class(1)}});
        SparseVecQ row{{c, mpq_class(1)}};
        for (auto& [col, val] : nf) row.emplace_back(col, -val);
        rows.push_back(normalize_sparse_vec(std::move(row)));
    }
    comp.ideal_slice = Subspace::adopt_rref(std::move(rows), std::move(pivots), ambient);
    return sections_.emplace(n, std::move(comp)).first->second;
}

const SparseVecQ& GradedAlgebra::project_word_locked(std::uint32_t n, std::uint64_t word_idx) {
    auto& cache = word_proj_[n];
    if (auto it = cache.find(word_idx); it != cache.end()) return it->second;
    auto& tower = exact_tower_locked(n);
    const auto& words = standard_words_locked(n);
    SparseRow<QOps> nf =
        tower.reduce(n, {{static_cast<std::uint32_t>(word_idx), mpq_class(1)}});
    SparseVecQ coords;
    coords.reserve(nf.size());
    for (auto& [col, val] : nf) {
        auto pos = std::lower_bound(words.begin(), words.end(), col);
        if (pos == words.end() || *pos != col)
            throw InternalError("normal form has support outside the section");
        coords.emplace_back(static_cast<std::uint32_t>(pos - words.begin()), std::move(val));
    }
    return cache.emplace(word_idx, std::move(coords)).first->second;
}

const SparseVecQ& GradedAlgebra::project_word(std::uint32_t n, std::uint64_t word_idx) {
    std::lock_guard lk(mu_);
    return project_word_locked(n, word_idx);
}

SparseVecQ GradedAlgebra::project_locked(const TensorVector& v) {
    SparseVecQ acc;
    for (const auto& [w, c] : v.coeffs) {
        for (const auto& [pos, val] : project_word_locked(v.degree, w))
            acc.emplace_back(pos, c * val);
    }
    return normalize_sparse_vec(std::move(acc));
}

SparseVecQ GradedAlgebra::project(const TensorVector& v) {
    std::lock_guard lk(mu_);
    return project_locked(v);
}

SparseMatrix GradedAlgebra::projection_matrix(std::uint32_t n) {
    std::lock_guard lk(mu_);
    std::uint32_t ambient = tensor_dim(gens(), n);
    SparseMatrix m(static_cast<std::uint32_t>(standard_words_locked(n).size()), ambient);
    for (std::uint32_t w = 0; w < ambient; ++w)
        for (const auto& [pos, val] : project_word_locked(n, w)) m.add(pos, w, val);
    m.finalize();
    return m;
}

SparseMatrix GradedAlgebra::mult_matrix(Side side, std::uint32_t generator, std::uint32_t n) {
    std::lock_guard lk(mu_);
    if (generator >= gens()) throw InputError("mult_matrix: generator index out of range");
    auto key = std::make_tuple(side == Side::left ? 0 : 1, generator, n);
    if (auto it = mult_cache_.find(key); it != mult_cache_.end()) return it->second;
    const auto& dom = standard_words_locked(n);
    std::uint64_t rows = standard_words_locked(n + 1).size();
    SparseMatrix m(static_cast<std::uint32_t>(rows), static_cast<std::uint32_t>(dom.size()));
    std::uint64_t g = gens();
    std::uint64_t left_shift = tensor_dim(gens(), n);
    for (std::uint32_t col = 0; col < dom.size(); ++col) {
        std::uint64_t w = dom[col];
        std::uint64_t target = side == Side::right ? w * g + generator : generator * left_shift + w;
        for (const auto& [pos, val] : project_word_locked(n + 1, target)) m.add(pos, col, val);
    }
    m.finalize();
    return mult_cache_.emplace(key, std::move(m)).first->second;
}

bool GradedAlgebra::ideal_membership(const TensorVector& v) {
    std::lock_guard lk(mu_);
    std::uint32_t n = v.degree;
    if (n > cfg_.cutoff) throw ResourceLimit("ideal_membership: degree exceeds cutoff");
    if (v.coeffs.empty()) return true;
    if (n < pres_.degree) return false;
    if (n <= cfg_.section_cutoff) {
        auto& tower = exact_tower_locked(n);
        return tower.reduce(n, v.coeffs).empty();
    }
    for (int which = 0; which < 2; ++which) {
        auto& tower = modular_tower_locked(which, n);
        ZpOps ops(which == 0 ? primes_.p1 : primes_.p2);
        if (!tower.reduce(n, convert_row(ops, v.coeffs)).empty()) return false;
    }
    return true;
}

std::vector<TensorVector> GradedAlgebra::dual_slice_basis_locked(std::uint32_t k) {
    if (auto it = j_bases_.find(k); it != j_bases_.end()) return it->second;
    if (tensor_dim(gens(), k) > exact_ambient_guard() && k > cfg_.section_cutoff)
        throw ResourceLimit("dual Koszul slice degree exceeds the exact-section guard");
    // once a slice at degree >= N dies, all later ones are zero
    for (const auto& [deg, basis] : j_bases_)
        if (deg >= pres_.degree && basis.empty() && k >= deg)
            return j_bases_.emplace(k, std::vector<TensorVector>{}).first->second;
    Subspace j = dual_koszul_slice(pres_.relators, k);
    std::vector<TensorVector> basis;
    basis.reserve(j.dim());
    for (const auto& row : j.basis()) {
        TensorVector v;
        v.degree = k;
        v.coeffs = row;
        basis.push_back(std::move(v));
    }
    return j_bases_.emplace(k, std::move(basis)).first->second;
}

std::vector<TensorVector> GradedAlgebra::dual_slice_basis(std::uint32_t k) {
    std::lock_guard lk(mu_);
    return dual_slice_basis_locked(k);
}

std::uint64_t GradedAlgebra::dual_slice_dim(std::uint32_t k) {
    std::lock_guard lk(mu_);
    return dual_slice_basis_locked(k).size();
}

std::uint32_t GradedAlgebra::koszul_death_degree(std::uint32_t cap) {
    std::lock_guard lk(mu_);
    for (std::uint32_t k = pres_.degree; k <= cap; ++k)
        if (dual_slice_basis_locked(k).empty()) return k;
    return cap + 1;
}

}  // namespace koszulkit
