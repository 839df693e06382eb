#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mcg {

// A letter is +(id+1) for a generator and -(id+1) for its inverse.
using Letter = int;

inline int letter_gen(Letter l) { return (l > 0 ? l : -l) - 1; }
inline int letter_sign(Letter l) { return l > 0 ? 1 : -1; }
inline Letter make_letter(int gen, int sign = 1) { return sign > 0 ? gen + 1 : -(gen + 1); }

// Freely reduced word in a free group.
class Word {
public:
    Word() = default;
    explicit Word(const std::vector<Letter>& letters);

    static Word gen(int id, int sign = 1);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Word inverse() const;
    Word pow(int k) const;
    // Exponent sum of one generator.
    int degree(int gen) const;
    int max_gen() const;

    Word& operator*=(const Word& other);
    friend Word operator*(Word a, const Word& b) { return a *= b; }
    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

// Throws std::invalid_argument for a zero letter or a generator id >= num_gens
// (when num_gens >= 0).
Word free_reduce(const std::vector<Letter>& letters, int num_gens = -1);

Word commutator(const Word& a, const Word& b);  // a b a^-1 b^-1
Word conjugate(const Word& x, const Word& w);   // x w x^-1
// Replaces generator k by images[k].
Word substitute(const Word& w, const std::vector<Word>& images);

enum class GenRole { HalfTwist, DehnTwist, BoundaryTwist, Artin, Other };

std::string to_string(GenRole r);

struct Presentation {
    std::vector<std::string> generators;
    std::vector<GenRole> roles;
    std::vector<Word> relators;

    int add_generator(const std::string& name, GenRole role = GenRole::Other);
    int index_of(const std::string& name) const;
    bool has(const std::string& name) const;
    int num_gens() const { return static_cast<int>(generators.size()); }

    Word g(const std::string& name, int sign = 1) const { return Word::gen(index_of(name), sign); }
    // Appends lhs * rhs^-1.
    void add_relation(const Word& lhs, const Word& rhs = Word());
    void add_relator(const Word& w);

    Word parse_word(const std::string& text) const;
    std::string word_text(const Word& w) const;

    std::string to_text() const;
    std::string to_json() const;
    static Presentation from_text(const std::string& text);
    static Presentation from_json(const std::string& text);
};

using Perm = std::vector<int>;  // 0-based images

Perm perm_identity(int degree);
Perm perm_compose(const Perm& p, const Perm& q);  // (p o q)(x) = p(q(x))
Perm perm_inverse(const Perm& p);
Perm transposition(int degree, int a, int b);     // 0-based points

struct HomCheck {
    bool ok = true;
    int failing_relator = -1;
    std::string image;  // printable image of the failing relator
};

// Words are read as composites: theta(uv) = theta(u) o theta(v).
Perm eval_perm(const Word& w, const std::vector<Perm>& images);
std::vector<std::int64_t> eval_abelian(const Word& w, const std::vector<std::vector<std::int64_t>>& images);

HomCheck verify_homomorphism(const Presentation& p, const std::vector<Perm>& images, int degree);
HomCheck verify_homomorphism(const Presentation& p, const std::vector<std::vector<std::int64_t>>& images,
                             int rank);

// Invariant factors > 1 in dividing order followed by one 0 per free factor.
std::vector<std::int64_t> abelianization(const Presentation& p);

// HLT coset enumeration; std::nullopt once more than `limit` cosets are defined.
std::optional<std::int64_t> todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                                         std::int64_t limit);

// Presentation of G from 1 -> K -> G -> H -> 1. Generators: lifted H generators
// named lift_names, then K's generators. w_r[i] is the K-word equal to the lift
// of H relator i; v[x][y] is the K-word equal to lift(x) y lift(x)^-1.
Presentation assemble_extension(const Presentation& K, const Presentation& H,
                                const std::vector<std::string>& lift_names,
                                const std::vector<Word>& w_r,
                                const std::vector<std::vector<Word>>& v);

}  // namespace mcg
