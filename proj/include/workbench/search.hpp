#pragma once

#include "workbench/frames.hpp"
#include "workbench/structure.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace workbench {

enum class FrameKind
{
    Ms4,
    Mipc,
};

struct EnumerateOptions
{
    /// Largest point count accepted.
    std::size_t cap = 5;
    /// Skip frames isomorphic to one already emitted.
    bool mod_iso = false;
};

/// Quasi-orders on n labeled points. Order: the off-diagonal pairs (i, j)
/// in row-major order form a binary counter, (0, 1) lowest.
[[nodiscard]] std::vector< Relation > quasi_orders( std::size_t n );

/// Partitions of n points as blocks, in lexicographic order of their
/// restricted growth strings.
[[nodiscard]] std::vector< std::vector< PointSet > > partitions( std::size_t n );

/// Default point names: a, b, c, ...
[[nodiscard]] std::vector< std::string > point_names( std::size_t n );

/// Streams every labeled MS4 frame on n points: quasi-orders in
/// `quasi_orders` order, then partitions in `partitions` order. Throws
/// Error (module "search") for n = 0 or n above the cap.
void for_each_ms4( std::size_t n, const std::function< void( const Ms4Frame& ) >& fn, EnumerateOptions options = {} );
[[nodiscard]] std::vector< Ms4Frame > enumerate_ms4( std::size_t n, EnumerateOptions options = {} );

/// Streams every labeled MIPC frame on n points: partial orders R in
/// `quasi_orders` order, then quasi-orders Q in the same order.
void for_each_mipc( std::size_t n, const std::function< void( const MipcFrame& ) >& fn, EnumerateOptions options = {} );
[[nodiscard]] std::vector< MipcFrame > enumerate_mipc( std::size_t n, EnumerateOptions options = {} );

/// Named boolean facts about one frame.
class Profile
{
public:
    Profile() = default;
    Profile( std::string frame_id, FrameKind kind ) : _frame_id{ std::move( frame_id ) }, _kind{ kind } {}

    [[nodiscard]] const std::string& frame_id() const noexcept { return _frame_id; }
    [[nodiscard]] FrameKind kind() const noexcept { return _kind; }
    [[nodiscard]] const std::vector< std::pair< std::string, bool > >& fields() const noexcept { return _fields; }

    void set( std::string name, bool value );
    [[nodiscard]] bool has( std::string_view name ) const noexcept;
    /// Throws Error (module "search") for a field that was not computed.
    [[nodiscard]] bool at( std::string_view name ) const;

private:
    std::string _frame_id;
    FrameKind _kind = FrameKind::Ms4;
    std::vector< std::pair< std::string, bool > > _fields;
};

/// Field names a profile of the given kind carries, in output order.
[[nodiscard]] const std::vector< std::string >& profile_fields( FrameKind kind );

struct ClassifyOptions
{
    /// Compute only these fields; empty means all.
    std::set< std::string, std::less<> > only;
    unsigned threads = 1;
};

/// MS4 fields: ms4_valid, mipc_valid, antisymmetric, KP (of the skeleton),
/// GKP, LKP, splitting, then one entry per registry axiom (kur through its
/// translation). MIPC fields: ms4_valid, mipc_valid, KP, kur.
/// ms4_valid and mipc_valid say whether the frame, read through
/// `mipc_to_ms4` or `ms4_to_mipc`, is a frame of that kind.
[[nodiscard]] Profile classify( const Ms4Frame& g, const ClassifyOptions& options = {} );
[[nodiscard]] Profile classify( const MipcFrame& f, const ClassifyOptions& options = {} );

/// Boolean combination (&, |, !, parentheses, true, false) of profile fields.
class Predicate
{
public:
    /// Throws ParseError (module "search"), or Error for a field unknown to `kind`.
    [[nodiscard]] static Predicate parse( std::string_view text, FrameKind kind = FrameKind::Ms4 );

    [[nodiscard]] bool operator()( const Profile& p ) const;
    [[nodiscard]] const std::set< std::string, std::less<> >& fields() const noexcept { return _fields; }
    [[nodiscard]] FrameKind kind() const noexcept { return _kind; }
    [[nodiscard]] const std::string& text() const noexcept { return _text; }

    struct Node;

private:
    std::shared_ptr< const Node > _root;
    std::set< std::string, std::less<> > _fields;
    FrameKind _kind = FrameKind::Ms4;
    std::string _text;
};

struct MinimalSearchOptions
{
    EnumerateOptions enumerate;
    unsigned threads = 1;
};

struct MinimalResult
{
    std::optional< AnyFrame > frame;
    /// frames_scanned[k] counts the frames on k + 1 points that were examined.
    std::vector< std::uint64_t > frames_scanned;
};

/// The first frame in enumeration order, scanning n = 1..max_n, whose
/// profile satisfies `predicate`. Every frame below the reported size was
/// examined and rejected.
[[nodiscard]] MinimalResult find_minimal( const Predicate& predicate, std::size_t max_n,
                                          MinimalSearchOptions options = {} );

} // namespace workbench
