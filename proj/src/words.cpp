#include "mcg/words.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace mcg {

using boost::multiprecision::cpp_int;

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
    if (!out.empty() && out.back() == -l)
        out.pop_back();
    else
        out.push_back(l);
}

}  // namespace

Word::Word(const std::vector<Letter>& letters) {
    letters_.reserve(letters.size());
    for (Letter l : letters) {
        if (l == 0) throw std::invalid_argument("zero letter");
        push_reduced(letters_, l);
    }
}

Word Word::gen(int id, int sign) {
    if (id < 0) throw std::invalid_argument("negative generator id");
    Word w;
    w.letters_.push_back(make_letter(id, sign));
    return w;
}

Word Word::inverse() const {
    Word w;
    w.letters_.assign(letters_.rbegin(), letters_.rend());
    for (Letter& l : w.letters_) l = -l;
    return w;
}

Word Word::pow(int k) const {
    const Word base = k < 0 ? inverse() : *this;
    Word out;
    for (int i = 0; i < std::abs(k); ++i) out *= base;
    return out;
}

int Word::degree(int gen) const {
    int d = 0;
    for (Letter l : letters_)
        if (letter_gen(l) == gen) d += letter_sign(l);
    return d;
}

int Word::max_gen() const {
    int m = -1;
    for (Letter l : letters_) m = std::max(m, letter_gen(l));
    return m;
}

Word& Word::operator*=(const Word& other) {
    for (Letter l : other.letters_) push_reduced(letters_, l);
    return *this;
}

Word free_reduce(const std::vector<Letter>& letters, int num_gens) {
    for (Letter l : letters)
        if (num_gens >= 0 && l != 0 && letter_gen(l) >= num_gens)
            throw std::invalid_argument("unknown generator id " + std::to_string(letter_gen(l)));
    return Word(letters);
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

Word conjugate(const Word& x, const Word& w) { return x * w * x.inverse(); }

Word substitute(const Word& w, const std::vector<Word>& images) {
    Word out;
    for (Letter l : w.letters()) {
        const int g = letter_gen(l);
        if (g >= static_cast<int>(images.size())) throw std::invalid_argument("substitute: no image for generator " + std::to_string(g));
        out *= letter_sign(l) > 0 ? images[g] : images[g].inverse();
    }
    return out;
}

std::string to_string(GenRole r) {
    switch (r) {
        case GenRole::HalfTwist: return "half-twist";
        case GenRole::DehnTwist: return "dehn-twist";
        case GenRole::BoundaryTwist: return "boundary-twist";
        case GenRole::Artin: return "artin";
        case GenRole::Other: return "other";
    }
    return "other";
}

// ---------------------------------------------------------------- Presentation

int Presentation::add_generator(const std::string& name, GenRole role) {
    if (name.empty() || name.find_first_of(" \t\n'") != std::string::npos)
        throw std::invalid_argument("bad generator name '" + name + "'");
    if (has(name)) throw std::invalid_argument("duplicate generator " + name);
    generators.push_back(name);
    roles.push_back(role);
    return num_gens() - 1;
}

int Presentation::index_of(const std::string& name) const {
    auto it = std::find(generators.begin(), generators.end(), name);
    if (it == generators.end()) throw std::invalid_argument("unknown generator " + name);
    return static_cast<int>(it - generators.begin());
}

bool Presentation::has(const std::string& name) const {
    return std::find(generators.begin(), generators.end(), name) != generators.end();
}

void Presentation::add_relator(const Word& w) {
    if (w.max_gen() >= num_gens()) throw std::invalid_argument("relator uses an undeclared generator");
    relators.push_back(w);
}

void Presentation::add_relation(const Word& lhs, const Word& rhs) { add_relator(lhs * rhs.inverse()); }

Word Presentation::parse_word(const std::string& text) const {
    std::istringstream in(text);
    std::string tok;
    std::vector<Letter> letters;
    while (in >> tok) {
        if (tok == "1") continue;
        int sign = 1;
        while (!tok.empty() && tok.back() == '\'') {
            sign = -sign;
            tok.pop_back();
        }
        letters.push_back(make_letter(index_of(tok), sign));
    }
    return Word(letters);
}

std::string Presentation::word_text(const Word& w) const {
    std::string out;
    for (Letter l : w.letters()) {
        if (!out.empty()) out += ' ';
        out += generators.at(letter_gen(l));
        if (l < 0) out += '\'';
    }
    return out;
}

std::string Presentation::to_text() const {
    std::string out = "gens:";
    for (const auto& g : generators) out += " " + g;
    out += '\n';
    for (const auto& r : relators) {
        out += "rel:";
        if (!r.empty()) out += " " + word_text(r);
        out += '\n';
    }
    return out;
}

std::string Presentation::to_json() const {
    nlohmann::json rels = nlohmann::json::array();
    for (const auto& r : relators) {
        nlohmann::json w = nlohmann::json::array();
        for (Letter l : r.letters()) w.push_back({letter_gen(l), letter_sign(l)});
        rels.push_back(w);
    }
    nlohmann::json j;
    j["generators"] = generators;
    j["relators"] = rels;
    return j.dump();
}

Presentation Presentation::from_text(const std::string& text) {
    Presentation p;
    std::istringstream in(text);
    std::string line;
    bool seen_gens = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind("gens:", 0) == 0) {
            if (seen_gens) throw std::invalid_argument("duplicate gens line");
            seen_gens = true;
            std::istringstream names(line.substr(5));
            std::string name;
            while (names >> name) p.add_generator(name);
        } else if (line.rfind("rel:", 0) == 0) {
            if (!seen_gens) throw std::invalid_argument("rel line before gens line");
            p.relators.push_back(p.parse_word(line.substr(4)));
        } else {
            throw std::invalid_argument("unrecognised line: " + line);
        }
    }
    if (!seen_gens) throw std::invalid_argument("missing gens line");
    return p;
}

Presentation Presentation::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    Presentation p;
    for (const auto& name : j.at("generators")) p.add_generator(name.get<std::string>());
    for (const auto& rel : j.at("relators")) {
        std::vector<Letter> letters;
        for (const auto& pair : rel) {
            const int idx = pair.at(0).get<int>();
            const int sign = pair.at(1).get<int>();
            if (sign != 1 && sign != -1) throw std::invalid_argument("letter sign must be +-1");
            letters.push_back(make_letter(idx, sign));
        }
        p.relators.push_back(free_reduce(letters, p.num_gens()));
    }
    return p;
}

// ---------------------------------------------------------------- homomorphisms

Perm perm_identity(int degree) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_compose(const Perm& p, const Perm& q) {
    Perm r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    return r;
}

Perm perm_inverse(const Perm& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

Perm transposition(int degree, int a, int b) {
    Perm p = perm_identity(degree);
    std::swap(p[a], p[b]);
    return p;
}

Perm eval_perm(const Word& w, const std::vector<Perm>& images) {
    const int d = images.empty() ? 0 : static_cast<int>(images[0].size());
    Perm acc = perm_identity(d);
    for (Letter l : w.letters()) {
        const Perm& img = images.at(letter_gen(l));
        acc = perm_compose(acc, l > 0 ? img : perm_inverse(img));
    }
    return acc;
}

std::vector<std::int64_t> eval_abelian(const Word& w, const std::vector<std::vector<std::int64_t>>& images) {
    const std::size_t m = images.empty() ? 0 : images[0].size();
    std::vector<std::int64_t> acc(m, 0);
    for (Letter l : w.letters()) {
        const auto& img = images.at(letter_gen(l));
        for (std::size_t i = 0; i < m; ++i) acc[i] += letter_sign(l) * img[i];
    }
    return acc;
}

namespace {

bool is_permutation(const Perm& p, int degree) {
    if (static_cast<int>(p.size()) != degree) return false;
    std::vector<bool> seen(degree, false);
    for (int x : p) {
        if (x < 0 || x >= degree || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

template <class T>
std::string join(const std::vector<T>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

}  // namespace

HomCheck verify_homomorphism(const Presentation& p, const std::vector<Perm>& images, int degree) {
    if (static_cast<int>(images.size()) != p.num_gens())
        throw std::invalid_argument("verify_homomorphism: image count differs from generator count");
    for (const auto& img : images)
        if (!is_permutation(img, degree)) throw std::invalid_argument("verify_homomorphism: bad permutation image");
    const Perm id = perm_identity(degree);
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        Perm img = eval_perm(p.relators[i], images);
        if (degree == 0) img.clear();
        if (img != id) return {false, static_cast<int>(i), join(img)};
    }
    return {};
}

HomCheck verify_homomorphism(const Presentation& p, const std::vector<std::vector<std::int64_t>>& images, int rank) {
    if (static_cast<int>(images.size()) != p.num_gens())
        throw std::invalid_argument("verify_homomorphism: image count differs from generator count");
    for (const auto& img : images)
        if (static_cast<int>(img.size()) != rank) throw std::invalid_argument("verify_homomorphism: bad vector image");
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        auto img = eval_abelian(p.relators[i], images);
        if (images.empty()) img.assign(rank, 0);
        if (std::any_of(img.begin(), img.end(), [](std::int64_t x) { return x != 0; }))
            return {false, static_cast<int>(i), join(img)};
    }
    return {};
}

// ---------------------------------------------------------------- abelianization

namespace {

using Matrix = std::vector<std::vector<cpp_int>>;

// Diagonal of the Smith normal form, in order.
std::vector<cpp_int> smith_diagonal(Matrix a) {
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<cpp_int> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // smallest nonzero entry in the remaining block
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break;
        std::swap(a[t], a[pr]);
        for (auto& row : a) std::swap(row[t], row[pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                const cpp_int q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                const cpp_int q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (auto& row : a) std::swap(row[t], row[j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility: fold any offending row into row t
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
                        clean = false;
                        break;
                    }
        }
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    return diag;
}

}  // namespace

std::vector<std::int64_t> abelianization(const Presentation& p) {
    const int n = p.num_gens();
    Matrix m;
    for (const auto& r : p.relators) {
        std::vector<cpp_int> row(n, 0);
        for (Letter l : r.letters()) row[letter_gen(l)] += letter_sign(l);
        m.push_back(std::move(row));
    }
    const auto diag = smith_diagonal(m);
    std::vector<std::int64_t> out;
    for (const auto& d : diag)
        if (d > 1) out.push_back(static_cast<std::int64_t>(d));
    std::sort(out.begin(), out.end());
    const int free_rank = n - static_cast<int>(diag.size());
    out.insert(out.end(), free_rank, 0);
    return out;
}

// ---------------------------------------------------------------- coset enumeration

namespace {

class CosetTable {
public:
    CosetTable(int gens, std::int64_t limit) : cols_(2 * gens), limit_(limit) { new_coset(); }

    bool overflow() const { return overflow_; }

    int col(Letter l) const { return 2 * letter_gen(l) + (l > 0 ? 0 : 1); }
    static int inv(int c) { return c ^ 1; }

    bool live(int c) const { return parent_[c] == c; }
    std::int64_t allocated() const { return static_cast<std::int64_t>(parent_.size()); }

    std::int64_t live_count() const {
        std::int64_t n = 0;
        for (std::size_t c = 0; c < parent_.size(); ++c)
            if (live(static_cast<int>(c))) ++n;
        return n;
    }

    int& at(int c, int x) { return table_[static_cast<std::size_t>(c) * cols_ + x]; }

    bool define(int c, int x) {
        if (allocated() >= limit_) {
            overflow_ = true;
            return false;
        }
        const int d = new_coset();
        at(c, x) = d;
        at(d, inv(x)) = c;
        return true;
    }

    void scan_and_fill(int c, const std::vector<int>& w) {
        if (w.empty()) return;
        int f = c, b = c;
        int i = 0, j = static_cast<int>(w.size()) - 1;
        for (;;) {
            while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && at(b, inv(w[j])) >= 0) b = at(b, inv(w[j--]));
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                at(f, w[i]) = b;
                at(b, inv(w[i])) = f;
                return;
            }
            if (!define(f, w[i])) return;
        }
    }

    int cols() const { return cols_; }

private:
    int new_coset() {
        const int d = static_cast<int>(parent_.size());
        parent_.push_back(d);
        table_.insert(table_.end(), cols_, -1);
        return d;
    }

    int rep(int c) {
        int r = c;
        while (parent_[r] != r) r = parent_[r];
        while (parent_[c] != r) {
            const int next = parent_[c];
            parent_[c] = r;
            c = next;
        }
        return r;
    }

    void merge(int k, int l, std::vector<int>& queue) {
        k = rep(k);
        l = rep(l);
        if (k == l) return;
        if (k > l) std::swap(k, l);
        parent_[l] = k;
        queue.push_back(l);
    }

    void coincidence(int a, int b) {
        std::vector<int> queue;
        merge(a, b, queue);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int e = queue[qi];
            for (int x = 0; x < cols_; ++x) {
                const int f = at(e, x);
                if (f < 0) continue;
                at(f, inv(x)) = -1;
                const int e1 = rep(e), f1 = rep(f);
                if (at(e1, x) >= 0)
                    merge(f1, at(e1, x), queue);
                else if (at(f1, inv(x)) >= 0)
                    merge(e1, at(f1, inv(x)), queue);
                else {
                    at(e1, x) = f1;
                    at(f1, inv(x)) = e1;
                }
            }
        }
    }

    int cols_;
    std::int64_t limit_;
    bool overflow_ = false;
    std::vector<int> parent_;
    std::vector<int> table_;
};

}  // namespace

std::optional<std::int64_t> todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                                         std::int64_t limit) {
    if (limit < 1) throw std::invalid_argument("todd_coxeter: limit must be positive");
    CosetTable t(p.num_gens(), limit);
    auto to_cols = [&](const Word& w) {
        std::vector<int> cols;
        for (Letter l : w.letters()) cols.push_back(t.col(l));
        return cols;
    };
    std::vector<std::vector<int>> rels;
    for (const auto& r : p.relators) rels.push_back(to_cols(r));

    for (const auto& h : subgroup) {
        t.scan_and_fill(0, to_cols(h));
        if (t.overflow()) return std::nullopt;
    }
    for (int c = 0; c < t.allocated(); ++c) {
        for (const auto& r : rels) {
            if (!t.live(c)) break;
            t.scan_and_fill(c, r);
            if (t.overflow()) return std::nullopt;
        }
        for (int x = 0; x < t.cols() && t.live(c); ++x)
            if (t.at(c, x) < 0 && !t.define(c, x)) return std::nullopt;
    }
    return t.live_count();
}

// ---------------------------------------------------------------- extensions

Presentation assemble_extension(const Presentation& K, const Presentation& H,
                                const std::vector<std::string>& lift_names,
                                const std::vector<Word>& w_r,
                                const std::vector<std::vector<Word>>& v) {
    const int nh = H.num_gens(), nk = K.num_gens();
    if (static_cast<int>(lift_names.size()) != nh)
        throw std::invalid_argument("assemble_extension: one lift name per H generator required");
    if (w_r.size() != H.relators.size())
        throw std::invalid_argument("assemble_extension: one K-word per H relator required");
    if (static_cast<int>(v.size()) != nh)
        throw std::invalid_argument("assemble_extension: v must have one row per H generator");
    for (const auto& row : v)
        if (static_cast<int>(row.size()) != nk)
            throw std::invalid_argument("assemble_extension: v must have one entry per K generator");
    auto check_k = [&](const Word& w) {
        if (w.max_gen() >= nk) throw std::invalid_argument("assemble_extension: dangling K symbol");
    };
    for (const auto& w : w_r) check_k(w);
    for (const auto& row : v)
        for (const auto& w : row) check_k(w);
    for (const auto& r : H.relators)
        if (r.max_gen() >= nh) throw std::invalid_argument("assemble_extension: dangling H symbol");
    for (const auto& r : K.relators) check_k(r);

    Presentation G;
    for (int i = 0; i < nh; ++i) G.add_generator(lift_names[i], H.roles.at(i));
    for (int i = 0; i < nk; ++i) G.add_generator(K.generators[i], K.roles.at(i));

    auto shift = [&](const Word& w, int offset) {
        std::vector<Letter> letters;
        for (Letter l : w.letters()) letters.push_back(make_letter(letter_gen(l) + offset, letter_sign(l)));
        return Word(letters);
    };
    for (std::size_t i = 0; i < H.relators.size(); ++i)
        G.relators.push_back(H.relators[i] * shift(w_r[i], nh).inverse());
    for (int x = 0; x < nh; ++x)
        for (int y = 0; y < nk; ++y)
            G.relators.push_back(conjugate(Word::gen(x), Word::gen(nh + y)) * shift(v[x][y], nh).inverse());
    for (const auto& r : K.relators) G.relators.push_back(shift(r, nh));
    return G;
}

}  // namespace mcg
