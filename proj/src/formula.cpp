#include "c1ke/formula.hpp"

#include <atomic>
#include <cassert>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>

namespace c1ke {

namespace {

struct Node {
    Kind kind;
    FormulaId a = k_no_formula;
    FormulaId b = k_no_formula;
    std::uint32_t atom = 0;       // index into atom-name table
    FormulaId expanded = k_no_formula;
    std::uint64_t digest = 0;
    std::uint32_t size = 0;        // size of expanded form
    std::uint32_t folded_size = 0; // size counting Cons as a unary connective
};

std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t hash_str(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : s) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ull;
    return h;
}

// Append-only node store.  Nodes live in fixed-size chunks hanging off a
// preallocated pointer table, so ids stay valid and readers can dereference
// them without holding the interner lock; only the id-producing intern calls
// synchronize.
class Interner {
    static constexpr std::size_t kChunkBits = 12;
    static constexpr std::size_t kChunkSize = 1u << kChunkBits;
    static constexpr std::size_t kMaxChunks = 1u << 16;  // 2^28 nodes

  public:
    const Node& node(FormulaId id) const {
        return chunks_[id >> kChunkBits][id & (kChunkSize - 1)];
    }

    std::size_t count() const { return count_.load(std::memory_order_acquire); }

    std::string_view atom_name(std::uint32_t idx) const {
        std::shared_lock lk(mutex_);
        return *atom_names_[idx];
    }

    FormulaId intern_atom(std::string_view name) {
        {
            std::shared_lock lk(mutex_);
            auto it = atom_index_.find(std::string(name));
            if (it != atom_index_.end()) return atoms_[it->second];
        }
        std::unique_lock lk(mutex_);
        auto it = atom_index_.find(std::string(name));
        if (it != atom_index_.end()) return atoms_[it->second];
        auto stored = std::make_unique<std::string>(name);
        std::uint32_t idx = static_cast<std::uint32_t>(atom_names_.size());
        Node n;
        n.kind = Kind::Atom;
        n.atom = idx;
        n.digest = mix(hash_str(name) ^ 0xa70a70a7ull);
        n.size = 1;
        n.folded_size = 1;
        FormulaId id = append(n);
        node_mut(id).expanded = id;
        atom_index_.emplace(*stored, idx);
        atom_names_.push_back(std::move(stored));
        atoms_.push_back(id);
        return id;
    }

    FormulaId intern(Kind k, FormulaId a, FormulaId b) {
        Key key{k, a, b};
        {
            std::shared_lock lk(mutex_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        std::unique_lock lk(mutex_);
        auto it = map_.find(key);
        if (it != map_.end()) return it->second;
        return build_locked(k, a, b);
    }

  private:
    struct Key {
        Kind k;
        FormulaId a, b;
        bool operator==(const Key& o) const { return k == o.k && a == o.a && b == o.b; }
    };
    struct KeyHash {
        std::size_t operator()(const Key& x) const {
            return static_cast<std::size_t>(
                mix((static_cast<std::uint64_t>(x.a) << 24) ^ x.b ^
                    (static_cast<std::uint64_t>(x.k) << 56)));
        }
    };

    Node& node_mut(FormulaId id) {
        return chunks_[id >> kChunkBits][id & (kChunkSize - 1)];
    }

    FormulaId append(Node n) {
        std::size_t c = count_.load(std::memory_order_relaxed);
        std::size_t chunk = c >> kChunkBits;
        if (chunk >= kMaxChunks) throw std::length_error("formula interner is full");
        if (!chunks_[chunk]) chunks_[chunk] = std::make_unique<Node[]>(kChunkSize);
        chunks_[chunk][c & (kChunkSize - 1)] = n;
        count_.store(c + 1, std::memory_order_release);
        return static_cast<FormulaId>(c);
    }

    // Must hold the exclusive lock.  Recursion only ever descends into
    // already-expanded operands, so it terminates after a constant number
    // of auxiliary interns per node.
    FormulaId build_locked(Kind k, FormulaId a, FormulaId b) {
        Key key{k, a, b};
        auto it = map_.find(key);
        if (it != map_.end()) return it->second;

        Node n;
        n.kind = k;
        n.a = a;
        n.b = b;
        FormulaId ea = node(a).expanded;
        FormulaId eb = (b == k_no_formula) ? k_no_formula : node(b).expanded;

        FormulaId id = append(n);
        map_.emplace(key, id);

        FormulaId exp;
        switch (k) {
            case Kind::Neg:
                exp = (ea == a) ? id : build_locked(Kind::Neg, ea, k_no_formula);
                break;
            case Kind::And:
            case Kind::Or:
            case Kind::Imp:
                exp = (ea == a && eb == b) ? id : build_locked(k, ea, eb);
                break;
            case Kind::Cons: {
                // @A  =>  ~(A & ~A), built over the expanded operand
                FormulaId na = build_locked(Kind::Neg, ea, k_no_formula);
                FormulaId conj = build_locked(Kind::And, ea, na);
                exp = build_locked(Kind::Neg, conj, k_no_formula);
                break;
            }
            case Kind::Atom:
            default:
                exp = id;  // unreachable; atoms go through intern_atom
                break;
        }

        Node& me = node_mut(id);
        me.expanded = exp;
        const Node& en = node(exp);
        me.size = (exp == id) ? compute_size(id) : en.size;
        me.digest = (exp == id) ? compute_digest(id) : en.digest;
        me.folded_size = compute_folded_size(id);
        return id;
    }

    std::uint32_t compute_size(FormulaId id) {
        const Node& n = node(id);
        switch (n.kind) {
            case Kind::Atom: return 1;
            case Kind::Neg: return 1 + node(n.a).size;
            default: return 1 + node(n.a).size + node(n.b).size;
        }
    }

    std::uint32_t compute_folded_size(FormulaId id) {
        const Node& n = node(id);
        switch (n.kind) {
            case Kind::Atom: return 1;
            case Kind::Neg:
            case Kind::Cons: return 1 + node(n.a).folded_size;
            default: return 1 + node(n.a).folded_size + node(n.b).folded_size;
        }
    }

    std::uint64_t compute_digest(FormulaId id) {
        const Node& n = node(id);
        std::uint64_t tag = static_cast<std::uint64_t>(n.kind) + 1;
        switch (n.kind) {
            case Kind::Atom: return n.digest;  // set by intern_atom
            case Kind::Neg: return mix(tag ^ (node(n.a).digest * 0x9ddfea08eb382d69ull));
            default:
                return mix(tag ^ (node(n.a).digest * 0x9ddfea08eb382d69ull) ^
                           mix(node(n.b).digest + tag));
        }
    }

    mutable std::shared_mutex mutex_;
    std::vector<std::unique_ptr<Node[]>> chunks_{kMaxChunks};
    std::atomic<std::size_t> count_{0};
    std::unordered_map<Key, FormulaId, KeyHash> map_;
    std::unordered_map<std::string, std::uint32_t> atom_index_;
    std::vector<std::unique_ptr<std::string>> atom_names_;
    std::vector<FormulaId> atoms_;
};

Interner& interner() {
    static Interner* instance = new Interner();  // never destroyed
    return *instance;
}

bool valid_atom_name(std::string_view name) {
    if (name.empty()) return false;
    auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
    auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9') || c == '_'; };
    if (!alpha(name[0])) return false;
    for (char c : name.substr(1))
        if (!alnum(c)) return false;
    return true;
}

}  // namespace

FormulaId mk_atom(std::string_view name) {
    if (!valid_atom_name(name))
        throw std::invalid_argument("invalid atom name: '" + std::string(name) + "'");
    return interner().intern_atom(name);
}

FormulaId mk_neg(FormulaId a) { return interner().intern(Kind::Neg, a, k_no_formula); }
FormulaId mk_and(FormulaId a, FormulaId b) { return interner().intern(Kind::And, a, b); }
FormulaId mk_or(FormulaId a, FormulaId b) { return interner().intern(Kind::Or, a, b); }
FormulaId mk_imp(FormulaId a, FormulaId b) { return interner().intern(Kind::Imp, a, b); }
FormulaId mk_cons(FormulaId a) { return interner().intern(Kind::Cons, a, k_no_formula); }

Kind kind(FormulaId f) { return interner().node(f).kind; }
FormulaId left(FormulaId f) { return interner().node(f).a; }
FormulaId right(FormulaId f) { return interner().node(f).b; }

std::string_view atom_name(FormulaId f) {
    const Node& n = interner().node(f);
    assert(n.kind == Kind::Atom);
    return interner().atom_name(n.atom);
}

FormulaId expansion(FormulaId f) { return interner().node(f).expanded; }
std::uint64_t digest(FormulaId f) { return interner().node(f).digest; }
std::uint32_t size(FormulaId f) { return interner().node(f).size; }
std::uint32_t folded_size(FormulaId f) { return interner().node(f).folded_size; }

Shape shape(FormulaId f) {
    const Node& n = interner().node(f);
    if (n.kind != Kind::Cons) return Shape{n.kind, n.a, n.b};
    // One-step unfold of @A: ~(A & ~A) with the operand's sugar intact.
    FormulaId body = mk_and(n.a, mk_neg(n.a));
    return Shape{Kind::Neg, body, k_no_formula};
}

std::optional<FormulaId> cons_shape(FormulaId f) {
    if (kind(f) == Kind::Cons) return left(f);
    Shape s = shape(f);
    if (s.kind != Kind::Neg) return std::nullopt;
    Shape body = shape(s.left);
    if (body.kind != Kind::And) return std::nullopt;
    Shape rneg = shape(body.right);
    if (rneg.kind != Kind::Neg) return std::nullopt;
    if (expansion(rneg.left) != expansion(body.left)) return std::nullopt;
    return body.left;
}

FormulaId mk_cons_in(FormulaId a, Signature mode) {
    FormulaId c = mk_cons(a);
    return mode == Signature::Sigma ? expansion(c) : c;
}

std::vector<FormulaId> subformulas(FormulaId f) {
    std::vector<FormulaId> out;
    std::unordered_set<FormulaId> seen;
    std::vector<FormulaId> stack{expansion(f)};
    while (!stack.empty()) {
        FormulaId cur = stack.back();
        stack.pop_back();
        if (!seen.insert(cur).second) continue;
        out.push_back(cur);
        switch (kind(cur)) {
            case Kind::Atom: break;
            case Kind::Neg:
                stack.push_back(left(cur));
                break;
            default:
                // preorder: left first when popped
                stack.push_back(right(cur));
                stack.push_back(left(cur));
                break;
        }
    }
    return out;
}

std::vector<FormulaId> cons_closure_universe(const Sequent& s, std::size_t cap) {
    std::vector<FormulaId> out;
    std::unordered_set<FormulaId> seen;
    std::vector<FormulaId> work;

    auto push = [&](FormulaId f) {
        f = expansion(f);
        if (seen.insert(f).second) {
            if (seen.size() > cap) throw UniverseLimitExceeded(cap);
            out.push_back(f);
            work.push_back(f);
        }
    };

    for (FormulaId p : s.premises) push(p);
    push(s.conclusion);

    while (!work.empty()) {
        FormulaId f = work.back();
        work.pop_back();
        switch (kind(f)) {
            case Kind::Atom: break;
            case Kind::Neg:
                push(left(f));
                break;
            default:
                push(left(f));
                push(right(f));
                break;
        }
        // ~((a # b) & ~(a # b)) pulls in the witnesses @a and @b; the
        // trigger strictly descends to proper components, so this
        // terminates.
        if (auto inner = cons_shape(f)) {
            Kind ik = kind(expansion(*inner));
            if (ik == Kind::And || ik == Kind::Or || ik == Kind::Imp) {
                push(expansion(mk_cons(left(expansion(*inner)))));
                push(expansion(mk_cons(right(expansion(*inner)))));
            }
        }
    }
    return out;
}

std::size_t interner_size() { return interner().count(); }

}  // namespace c1ke
