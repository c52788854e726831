#pragma once

#include <rotor/plmap.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace rotor {

// Word in the free group on k generators: letter i > 0 is generator i, -i its inverse.
// A word acts as the composite of its letters, leftmost letter applied last.
using Word = std::vector<int>;

Word inverse_word(const Word& w);
// Concatenation followed by free reduction.
Word multiply(const Word& a, const Word& b);
Word reduce(Word w);

// Homomorphism from a free group (with optional declared relations) to Homeo+(S^1),
// optionally with a chosen lift of each generator.
class GroupAction {
public:
    GroupAction() = default;
    // Throws Error(ValidationError) if a lift does not project to its generator or a
    // relation does not evaluate to the identity.
    explicit GroupAction(std::vector<CircleHomeo> generators, std::optional<std::vector<PLLift>> lifts = std::nullopt,
                         std::vector<Word> relations = {});

    // Z-action by a single generator, lifted by `lift`.
    static GroupAction cyclic(const PLLift& lift);

    int rank() const { return static_cast<int>(generators_.size()); }
    const std::vector<CircleHomeo>& generators() const { return generators_; }
    bool has_lifts() const { return lifts_.has_value(); }
    const std::vector<PLLift>& lifts() const;
    const std::vector<Word>& relations() const { return relations_; }

    GroupAction with_lifts(std::vector<PLLift> lifts) const;
    GroupAction without_lifts() const;

    friend bool operator==(const GroupAction& a, const GroupAction& b) {
        return a.generators_ == b.generators_ && a.lifts_ == b.lifts_ && a.relations_ == b.relations_;
    }

private:
    std::vector<CircleHomeo> generators_;
    std::optional<std::vector<PLLift>> lifts_;
    std::vector<Word> relations_;
};

// Throws Error(InvalidWord) on a letter out of range.
CircleHomeo evaluate_word(const GroupAction& action, const Word& w);
// Requires lifts; throws Error(InvalidInput) otherwise.
PLLift evaluate_lifted_word(const GroupAction& action, const Word& w);

// All reduced words of length <= radius, shortest first, in a fixed order.
std::vector<Word> word_ball(int rank, int radius);

struct BallElement {
    Word word;
    CircleHomeo element;
};
// Images of word_ball(rank, radius), each computed from its prefix by one composition.
std::vector<BallElement> ball_images(const GroupAction& action, int radius);

struct LiftedBallElement {
    Word word;
    PLLift element;
};
std::vector<LiftedBallElement> lifted_ball_images(const GroupAction& action, int radius);

}  // namespace rotor
