#include "vcpoly/lp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace vcpoly {

namespace {

int sign_of(const Int& v) { return sgn(v); }

// ---------------------------------------------------------------------
// Exact verification of outputs against the original system. Any failure
// here is an engine bug, never a verdict.

std::vector<Rat> values_by_column(const LinearSystem& sys, const ExtendedPoint& pt,
                                  bool require_all) {
    std::vector<Rat> vals(sys.num_vars(), Rat(0));
    for (int c = 0; c < sys.num_vars(); ++c) {
        auto it = pt.values.find(sys.vars[c]);
        if (it == pt.values.end()) {
            if (require_all)
                throw std::invalid_argument("point misses variable " + sys.vars[c].name());
        } else {
            vals[c] = it->second;
        }
    }
    return vals;
}

void verify_point_exact(const LinearSystem& sys, const std::vector<Rat>& vals) {
    for (const Rat& v : vals)
        if (v < 0) throw std::logic_error("lp: witness violates nonnegativity");
    for (const Row& row : sys.rows) {
        Rat acc = 0;
        for (const auto& [c, coef] : row.terms) acc += coef * vals[c];
        if (row.rel == RowRel::Eq ? acc != row.rhs : acc < row.rhs)
            throw std::logic_error("lp: witness violates row '" + row.label + "'");
    }
}

void verify_certificate_exact(const LinearSystem& sys,
                              const std::vector<std::pair<int, Rat>>& cert) {
    std::map<int, Rat> combined;
    Rat beta = 0;
    bool nonzero = false;
    for (const auto& [r, mult] : cert) {
        if (mult == 0) continue;
        nonzero = true;
        const Row& row = sys.rows.at(r);
        if (row.rel == RowRel::Ge && mult < 0)
            throw std::logic_error("lp: certificate has negative multiplier on a >= row");
        for (const auto& [c, coef] : row.terms) combined[c] += mult * coef;
        beta += mult * row.rhs;
    }
    if (!nonzero) throw std::logic_error("lp: empty certificate");
    for (const auto& [c, coef] : combined)
        if (coef > 0) throw std::logic_error("lp: certificate combination has a positive coefficient");
    if (beta <= 0) throw std::logic_error("lp: certificate combination is not contradictory");
}

// ---------------------------------------------------------------------

struct IntRow {
    std::vector<std::pair<std::int32_t, Int>> terms;  // sorted by column
    Int rhs = 0;
    Rat scale = 1;  // int row = scale * original row
};

class SimplexEngine {
public:
    explicit SimplexEngine(const LinearSystem& sys) : sys_(sys) {
        integerize();
        presolve();
        if (!infeasible_) gauss();
        if (!infeasible_) {
            build_tableau();
            run_phase1();
        }
        if (infeasible_) finish_certificate();
        status_ = infeasible_ ? LpStatus::Infeasible : LpStatus::Feasible;
    }

    LpStatus status() const { return status_; }

    const std::vector<std::pair<int, Rat>>& certificate() const { return cert_; }

    std::vector<Rat> witness() const {
        if (status_ != LpStatus::Feasible) throw std::logic_error("witness on infeasible system");
        std::vector<Rat> vals(sys_.num_vars(), Rat(0));
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < num_struct_) {
                const int col = tcols_[basis_[i]];
                if (col < sys_.num_vars()) vals[col] = Rat(T_[i + 1][rhs_col_]) / Rat(d_);
            }
        }
        verify_point_exact(sys_, vals);
        return vals;
    }

    struct MaxOut {
        bool unbounded = false;
        Rat value = 0;
        std::vector<Rat> point;  // over system columns
    };

    // Maximize a rational objective given per system column.
    MaxOut maximize(const std::vector<Rat>& obj) {
        if (status_ != LpStatus::Feasible) throw std::logic_error("maximize on infeasible system");
        MaxOut out;
        // Scale the objective to integers.
        Int den = 1;
        for (const Rat& c : obj) den = lcm(den, Int(c.get_den()));
        std::vector<Int> c_int(ncols_, 0);
        for (size_t col = 0; col < obj.size(); ++col)
            if (obj[col] != 0) {
                if (zeroed_[col]) continue;  // fixed to zero, contributes nothing
                if (col_to_tcol_[col] < 0) {
                    // Entirely unconstrained variable.
                    if (obj[col] > 0) {
                        out.unbounded = true;
                        return out;
                    }
                    continue;
                }
                Rat scaled = obj[col] * Rat(den);
                c_int[col] = Int(scaled.get_num());
            }
        install_objective(c_int);
        if (!optimize(/*allow_unbounded=*/true)) {
            out.unbounded = true;
            return out;
        }
        out.value = Rat(T_[0][rhs_col_]) / (Rat(d_) * Rat(den));
        out.point.assign(sys_.num_vars(), Rat(0));
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < num_struct_) {
                const int col = tcols_[basis_[i]];
                if (col < sys_.num_vars()) out.point[col] = Rat(T_[i + 1][rhs_col_]) / Rat(d_);
            }
        verify_point_exact(sys_, out.point);
        // The tableau objective value must match the point exactly.
        Rat check = 0;
        for (size_t col = 0; col < obj.size(); ++col)
            if (obj[col] != 0 && !zeroed_[col] && col_to_tcol_[col] >= 0)
                check += obj[col] * out.point[col];
        if (check != out.value) throw std::logic_error("lp: objective value mismatch");
        return out;
    }

private:
    const LinearSystem& sys_;
    int ncols_ = 0;  // structural system columns + slacks
    std::vector<IntRow> irows_;
    std::vector<char> dead_;
    bool infeasible_ = false;
    LpStatus status_ = LpStatus::Infeasible;

    // Presolve bookkeeping.
    std::vector<char> zeroed_;
    struct ZeroStep {
        std::int32_t col;
        int irow;
        int sign;  // sign of the live coefficients of irow at derivation time
    };
    std::vector<ZeroStep> zero_steps_;
    std::vector<Rat> lam_int_;  // infeasibility multipliers over int rows
    std::vector<std::pair<int, Rat>> cert_;

    // Gauss output: independent rows with provenance over int rows.
    struct RedRow {
        std::map<std::int32_t, Int> terms;
        Int rhs = 0;
        std::map<std::int32_t, Rat> prov;
    };
    std::vector<RedRow> reduced_;

    // Tableau state.
    int m_ = 0;
    int num_struct_ = 0;
    int rhs_col_ = 0;
    int width_ = 0;
    std::vector<std::int32_t> tcols_;       // tableau col -> engine col
    std::vector<std::int32_t> col_to_tcol_; // engine col -> tableau col or -1
    std::vector<std::vector<Int>> T_;       // row 0 objective, rows 1..m_
    Int d_ = 1;
    std::vector<std::int32_t> basis_;

    void integerize() {
        ncols_ = sys_.num_vars();
        irows_.reserve(sys_.rows.size());
        for (const Row& row : sys_.rows) {
            Int den = 1;
            for (const auto& [c, coef] : row.terms) den = lcm(den, Int(coef.get_den()));
            den = lcm(den, Int(row.rhs.get_den()));
            IntRow ir;
            ir.scale = Rat(den);
            for (const auto& [c, coef] : row.terms) {
                Rat scaled = coef * Rat(den);
                if (scaled != 0) ir.terms.emplace_back(c, Int(scaled.get_num()));
            }
            Rat rb = row.rhs * Rat(den);
            ir.rhs = Int(rb.get_num());
            if (row.rel == RowRel::Ge) ir.terms.emplace_back(ncols_++, Int(-1));
            irows_.push_back(std::move(ir));
        }
        zeroed_.assign(ncols_, 0);
        dead_.assign(irows_.size(), 0);
    }

    void mark_infeasible_from_row(int r, int lam_sign) {
        lam_int_.assign(irows_.size(), Rat(0));
        lam_int_[r] = lam_sign;
        infeasible_ = true;
    }

    void presolve() {
        bool changed = true;
        while (changed && !infeasible_) {
            changed = false;
            for (size_t r = 0; r < irows_.size(); ++r) {
                if (dead_[r]) continue;
                int pos = 0, neg = 0;
                for (const auto& [c, v] : irows_[r].terms)
                    if (!zeroed_[c]) (sign_of(v) > 0 ? pos : neg) += 1;
                const Int& rhs = irows_[r].rhs;
                if (pos + neg == 0) {
                    if (rhs != 0) {
                        mark_infeasible_from_row(static_cast<int>(r), sign_of(rhs));
                        return;
                    }
                    dead_[r] = 1;
                    continue;
                }
                if (pos != 0 && neg != 0) continue;
                const int sig = pos > 0 ? 1 : -1;
                if (rhs == 0) {
                    for (const auto& [c, v] : irows_[r].terms)
                        if (!zeroed_[c]) {
                            zeroed_[c] = 1;
                            zero_steps_.push_back({c, static_cast<int>(r), sig});
                        }
                    dead_[r] = 1;
                    changed = true;
                } else if ((sign_of(rhs) > 0) != (sig > 0)) {
                    // One-signed sum equal to a value of the opposite sign.
                    mark_infeasible_from_row(static_cast<int>(r), -sig);
                    return;
                }
            }
        }
    }

    static void work_scale(RedRow& w, const Int& f) {
        for (auto& [c, v] : w.terms) v *= f;
        w.rhs *= f;
        Rat rf(f);
        for (auto& [r, m] : w.prov) m *= rf;
    }

    static void work_axpy(RedRow& w, const Int& f, const RedRow& p) {
        for (const auto& [c, v] : p.terms) {
            Int& slot = w.terms[c];
            slot += f * v;
            if (slot == 0) w.terms.erase(c);
        }
        w.rhs += f * p.rhs;
        Rat rf(f);
        for (const auto& [r, m] : p.prov) {
            Rat& slot = w.prov[r];
            slot += rf * m;
            if (slot == 0) w.prov.erase(r);
        }
    }

    static void work_normalize(RedRow& w) {
        Int g = 0;
        for (const auto& [c, v] : w.terms) g = gcd(g, v);
        g = gcd(g, w.rhs);
        if (g == 0 || g == 1) return;
        for (auto& [c, v] : w.terms) v /= g;
        w.rhs /= g;
        Rat rg(g);
        for (auto& [r, m] : w.prov) m /= rg;
    }

    void gauss() {
        std::vector<RedRow> work;
        work.reserve(irows_.size());
        for (size_t r = 0; r < irows_.size(); ++r) {
            if (dead_[r]) continue;
            RedRow w;
            for (const auto& [c, v] : irows_[r].terms)
                if (!zeroed_[c]) w.terms[c] = v;
            if (w.terms.empty()) continue;  // rhs 0, presolve would have caught otherwise
            w.rhs = irows_[r].rhs;
            w.prov[static_cast<std::int32_t>(r)] = 1;
            work.push_back(std::move(w));
        }
        std::stable_sort(work.begin(), work.end(),
                         [](const RedRow& a, const RedRow& b) { return a.terms.size() < b.terms.size(); });

        std::map<std::int32_t, int> pivot_of_col;
        for (RedRow& w : work) {
            while (true) {
                int hit_idx = -1;
                std::int32_t hit_col = -1;
                for (const auto& [c, v] : w.terms) {
                    auto it = pivot_of_col.find(c);
                    if (it != pivot_of_col.end()) {
                        hit_idx = it->second;
                        hit_col = c;
                        break;
                    }
                }
                if (hit_idx < 0) break;
                const RedRow& p = reduced_[hit_idx];
                const Int pv = p.terms.at(hit_col);
                const Int v = w.terms.at(hit_col);
                work_scale(w, pv);
                work_axpy(w, -v, p);
                w.terms.erase(hit_col);
                work_normalize(w);
            }
            if (w.terms.empty()) {
                if (w.rhs != 0) {
                    lam_int_.assign(irows_.size(), Rat(0));
                    const Rat flip = sign_of(w.rhs) > 0 ? Rat(1) : Rat(-1);
                    for (const auto& [r, m] : w.prov) lam_int_[r] = flip * m;
                    infeasible_ = true;
                    return;
                }
                continue;  // dependent row
            }
            if (sign_of(w.rhs) < 0) work_scale(w, Int(-1));
            // Pivot on the smallest-magnitude coefficient to limit growth.
            std::int32_t pc = w.terms.begin()->first;
            for (const auto& [c, v] : w.terms) {
                if (cmpabs(v.get_mpz_t(), w.terms.at(pc).get_mpz_t()) < 0) pc = c;
            }
            pivot_of_col[pc] = static_cast<int>(reduced_.size());
            reduced_.push_back(std::move(w));
        }
    }

    static int cmpabs(const mpz_t a, const mpz_t b) { return mpz_cmpabs(a, b); }

    void build_tableau() {
        col_to_tcol_.assign(ncols_, -1);
        for (const RedRow& rr : reduced_)
            for (const auto& [c, v] : rr.terms)
                if (col_to_tcol_[c] < 0) {
                    col_to_tcol_[c] = static_cast<std::int32_t>(tcols_.size());
                    tcols_.push_back(c);
                }
        m_ = static_cast<int>(reduced_.size());
        num_struct_ = static_cast<int>(tcols_.size());
        width_ = num_struct_ + m_ + 1;
        rhs_col_ = width_ - 1;
        T_.assign(m_ + 1, std::vector<Int>(width_, Int(0)));
        basis_.resize(m_);
        for (int i = 0; i < m_; ++i) {
            for (const auto& [c, v] : reduced_[i].terms) T_[i + 1][col_to_tcol_[c]] = v;
            T_[i + 1][num_struct_ + i] = 1;
            T_[i + 1][rhs_col_] = reduced_[i].rhs;
            basis_[i] = num_struct_ + i;
        }
        d_ = 1;
    }

    void negate_tableau() {
        for (auto& row : T_)
            for (Int& v : row) v = -v;
        d_ = -d_;
    }

    void pivot(int prow, int pcol) {
        const std::vector<Int>& P = T_[prow];
        const Int piv = P[pcol];
        static thread_local Int t1, t2;
        for (int i = 0; i <= m_; ++i) {
            if (i == prow) continue;
            std::vector<Int>& R = T_[i];
            const Int riq = R[pcol];
            if (riq == 0) {
                for (int j = 0; j < width_; ++j) {
                    if (R[j] == 0) continue;
                    mpz_mul(t1.get_mpz_t(), piv.get_mpz_t(), R[j].get_mpz_t());
                    mpz_divexact(R[j].get_mpz_t(), t1.get_mpz_t(), d_.get_mpz_t());
                }
            } else {
                for (int j = 0; j < width_; ++j) {
                    mpz_mul(t1.get_mpz_t(), piv.get_mpz_t(), R[j].get_mpz_t());
                    mpz_mul(t2.get_mpz_t(), riq.get_mpz_t(), P[j].get_mpz_t());
                    mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
                    mpz_divexact(R[j].get_mpz_t(), t1.get_mpz_t(), d_.get_mpz_t());
                }
            }
        }
        d_ = piv;
        basis_[prow - 1] = static_cast<std::int32_t>(pcol);
        if (sign_of(d_) < 0) negate_tableau();
    }

    // Bland: smallest structural column with negative reduced cost.
    int pricing() const {
        for (int j = 0; j < num_struct_; ++j)
            if (sign_of(T_[0][j]) < 0) return j;
        return -1;
    }

    // Returns the pivot row for entering column e, or 0 when unbounded.
    int ratio_row(int e) const {
        int best = 0;
        for (int i = 1; i <= m_; ++i) {
            if (sign_of(T_[i][e]) <= 0) continue;
            if (best == 0) {
                best = i;
                continue;
            }
            static thread_local Int lhs, rhs;
            mpz_mul(lhs.get_mpz_t(), T_[i][rhs_col_].get_mpz_t(), T_[best][e].get_mpz_t());
            mpz_mul(rhs.get_mpz_t(), T_[best][rhs_col_].get_mpz_t(), T_[i][e].get_mpz_t());
            const int cmp = mpz_cmp(lhs.get_mpz_t(), rhs.get_mpz_t());
            if (cmp < 0 || (cmp == 0 && basis_[i - 1] < basis_[best - 1])) best = i;
        }
        return best;
    }

    // Pivots until optimal. Returns false when unbounded (only possible
    // when allow_unbounded).
    bool optimize(bool allow_unbounded) {
        long guard = 0;
        while (true) {
            if (++guard > 20'000'000L) throw std::logic_error("lp: pivot guard exceeded");
            const int e = pricing();
            if (e < 0) return true;
            const int r = ratio_row(e);
            if (r == 0) {
                if (allow_unbounded) return false;
                throw std::logic_error("lp: unexpected unbounded direction");
            }
            pivot(r, e);
        }
    }

    void run_phase1() {
        // Maximize minus the sum of artificials, starting from the
        // artificial basis.
        for (int j = 0; j < width_; ++j) {
            Int acc = 0;
            for (int i = 1; i <= m_; ++i) acc += T_[i][j];
            T_[0][j] = -acc;
        }
        for (int i = 0; i < m_; ++i) T_[0][num_struct_ + i] = 0;
        optimize(/*allow_unbounded=*/false);
        if (T_[0][rhs_col_] != 0) {
            // Optimal value of -sum(artificials) is negative: infeasible.
            lam_int_.assign(irows_.size(), Rat(0));
            const Rat dr(d_);
            for (int i = 0; i < m_; ++i) {
                // Dual value y_i = T0[art_i]/d - 1; the certificate over
                // reduced rows is -y.
                Rat lam_red = Rat(1) - Rat(T_[0][num_struct_ + i]) / dr;
                if (lam_red == 0) continue;
                for (const auto& [r, mlt] : reduced_[i].prov) lam_int_[r] += lam_red * mlt;
            }
            infeasible_ = true;
            return;
        }
        // Drive leftover artificials out of the basis (possible because the
        // reduced rows are linearly independent).
        for (int i = 1; i <= m_; ++i) {
            if (basis_[i - 1] < num_struct_) continue;
            int target = -1;
            for (int j = 0; j < num_struct_; ++j)
                if (T_[i][j] != 0) {
                    target = j;
                    break;
                }
            if (target < 0) throw std::logic_error("lp: dependent row survived reduction");
            pivot(i, target);
        }
    }

    void install_objective(const std::vector<Int>& c_int) {
        for (int j = 0; j < width_; ++j) {
            Int acc = 0;
            for (int i = 1; i <= m_; ++i) {
                const std::int32_t b = basis_[i - 1];
                if (b < num_struct_ && c_int[tcols_[b]] != 0) acc += c_int[tcols_[b]] * T_[i][j];
            }
            if (j < num_struct_)
                T_[0][j] = acc - d_ * c_int[tcols_[j]];
            else
                T_[0][j] = acc;
        }
    }

    // Turns lam_int_ into a verified certificate over system rows.
    void finish_certificate() {
        // Repair coefficients on presolve-zeroed columns, newest first.
        std::vector<int> touched;
        for (size_t r = 0; r < lam_int_.size(); ++r)
            if (lam_int_[r] != 0) touched.push_back(static_cast<int>(r));
        auto combined_coeff = [&](std::int32_t col) {
            Rat acc = 0;
            for (int r : touched) {
                if (lam_int_[r] == 0) continue;
                for (const auto& [c, v] : irows_[r].terms)
                    if (c == col) acc += lam_int_[r] * Rat(v);
            }
            return acc;
        };
        for (auto it = zero_steps_.rbegin(); it != zero_steps_.rend(); ++it) {
            const Rat coef = combined_coeff(it->col);
            if (coef <= 0) continue;
            Int a = 0;
            for (const auto& [c, v] : irows_[it->irow].terms)
                if (c == it->col) a = v;
            const Rat denom = Rat(it->sign) * Rat(a);  // > 0 by construction
            const Rat mult = coef / denom;
            if (lam_int_[it->irow] == 0) touched.push_back(it->irow);
            lam_int_[it->irow] -= mult * Rat(it->sign);
        }
        cert_.clear();
        for (size_t r = 0; r < lam_int_.size(); ++r)
            if (lam_int_[r] != 0) cert_.emplace_back(static_cast<int>(r), lam_int_[r] * irows_[r].scale);
        verify_certificate_exact(sys_, cert_);
    }
};

ExtendedPoint point_from_values(const LinearSystem& sys, const std::vector<Rat>& vals) {
    ExtendedPoint pt;
    for (int c = 0; c < sys.num_vars(); ++c) pt.values[sys.vars[c]] = vals[c];
    return pt;
}

}  // namespace

LpVerdict lp_feasible(const LinearSystem& sys) {
    SimplexEngine eng(sys);
    LpVerdict v;
    v.status = eng.status();
    if (v.status == LpStatus::Feasible)
        v.witness = point_from_values(sys, eng.witness());
    else
        v.certificate = eng.certificate();
    return v;
}

MaxVarResult lp_max_var(const LinearSystem& sys, const VarSet& vs) {
    MaxVarResult out;
    auto col = sys.column(vs);
    if (!col) {
        out.prezeroed = true;
        return out;
    }
    SimplexEngine eng(sys);
    if (eng.status() == LpStatus::Infeasible)
        throw std::invalid_argument("lp_max_var: system is infeasible");
    std::vector<Rat> obj(sys.num_vars(), Rat(0));
    obj[*col] = 1;
    auto mo = eng.maximize(obj);
    if (mo.unbounded) throw std::logic_error("lp_max_var: unbounded variable");
    out.value = mo.value;
    return out;
}

OptResult lp_maximize(const LinearSystem& sys,
                      const std::vector<std::pair<VarSet, Rat>>& objective) {
    OptResult out;
    std::vector<Rat> obj(sys.num_vars(), Rat(0));
    for (const auto& [vs, coef] : objective) {
        auto col = sys.column(vs);
        if (!col) throw std::invalid_argument("lp_maximize: unregistered variable " + vs.name());
        obj[*col] += coef;
    }
    SimplexEngine eng(sys);
    if (eng.status() == LpStatus::Infeasible) {
        out.status = OptStatus::Infeasible;
        out.certificate = eng.certificate();
        return out;
    }
    auto mo = eng.maximize(obj);
    if (mo.unbounded) {
        out.status = OptStatus::Unbounded;
        return out;
    }
    out.status = OptStatus::Optimal;
    out.value = mo.value;
    out.argmax = point_from_values(sys, mo.point);
    return out;
}

PointCheck check_point(const LinearSystem& sys, const ExtendedPoint& pt) {
    const std::vector<Rat> vals = values_by_column(sys, pt, /*require_all=*/true);
    PointCheck out;
    out.pass = true;
    for (int c = 0; c < sys.num_vars(); ++c)
        if (vals[c] < 0) {
            out.negative_vars.push_back(sys.vars[c]);
            out.pass = false;
        }
    out.rows.reserve(sys.rows.size());
    for (int r = 0; r < sys.num_rows(); ++r) {
        const Row& row = sys.rows[r];
        Rat acc = 0;
        for (const auto& [c, coef] : row.terms) acc += coef * vals[c];
        RowResidual rr;
        rr.row = r;
        rr.label = row.label;
        if (row.rel == RowRel::Eq) {
            rr.value = acc - row.rhs;
            rr.ok = (rr.value == 0);
        } else {
            rr.value = acc - row.rhs;
            rr.ok = (rr.value >= 0);
        }
        if (!rr.ok) out.pass = false;
        out.rows.push_back(std::move(rr));
    }
    return out;
}

ForcedZeroResult forced_zero_set(const LinearSystem& sys, int level) {
    if (level < 1) throw std::invalid_argument("forced_zero_set: level must be >= 1");
    ForcedZeroResult out;
    SimplexEngine eng(sys);
    if (eng.status() == LpStatus::Infeasible) {
        out.all = true;
        return out;
    }
    std::vector<std::int32_t> candidates;
    for (int c = 0; c < sys.num_vars(); ++c) {
        const size_t s = sys.vars[c].size();
        if (s >= 1 && static_cast<int>(s) <= level) candidates.push_back(c);
    }
    std::vector<char> alive(sys.num_vars(), 0);
    for (std::int32_t c : candidates) alive[c] = 1;
    // Shrink the candidate set via support maximization: when the maximum
    // of the remaining sum is 0, all remaining candidates are forced zero.
    while (!candidates.empty()) {
        std::vector<Rat> obj(sys.num_vars(), Rat(0));
        bool any = false;
        for (std::int32_t c : candidates)
            if (alive[c]) {
                obj[c] = 1;
                any = true;
            }
        if (!any) break;
        auto mo = eng.maximize(obj);
        if (mo.unbounded) throw std::logic_error("forced_zero_set: unbounded sum");
        if (mo.value == 0) break;
        bool removed = false;
        for (std::int32_t c : candidates)
            if (alive[c] && mo.point[c] > 0) {
                alive[c] = 0;
                removed = true;
            }
        if (!removed) throw std::logic_error("forced_zero_set: positive sum without support");
    }
    for (std::int32_t c : candidates)
        if (alive[c]) out.zeros.insert(sys.vars[c]);
    return out;
}

}  // namespace vcpoly
