#pragma once
// Reference figures the acceptance criteria are stated against
// (three decimals unless noted). Rows follow the layout of `einz tables`.

#include <array>

namespace reference {

// Table 1 (stand 17), rows 2..5 cards and "any"; columns 17 18 19 20 einz.
inline constexpr std::array<std::array<double, 5>, 5> table1{{
    {0.036, 0.027, 0.024, 0.016, 0.016},
    {0.074, 0.067, 0.051, 0.035, 0.038},
    {0.040, 0.042, 0.056, 0.036, 0.027},
    {0.010, 0.009, 0.013, 0.012, 0.008},
    {0.161, 0.147, 0.145, 0.100, 0.092},
}};
// ">5" row upper bounds.
inline constexpr std::array<double, 5> table1_tail{0.001, 0.001, 0.002, 0.002, 0.002};
inline constexpr double table1_bust = 0.355;

// Table 2 (stand 18); columns 18 19 20 einz.
inline constexpr std::array<std::array<double, 4>, 5> table2{{
    {0.027, 0.024, 0.016, 0.016},
    {0.067, 0.056, 0.040, 0.044},
    {0.042, 0.066, 0.046, 0.038},
    {0.009, 0.018, 0.017, 0.014},
    {0.147, 0.167, 0.122, 0.114},
}};
inline constexpr std::array<double, 4> table2_tail{0.001, 0.003, 0.003, 0.003};
inline constexpr double table2_bust = 0.450;

// Table 3: columns 17v17 17v18 18v17 18v18; rows p1 wins, tied, p2 wins.
inline constexpr std::array<std::array<double, 4>, 3> table3{{
    {0.402, 0.379, 0.399, 0.373},
    {0.079, 0.058, 0.058, 0.064},
    {0.520, 0.563, 0.543, 0.562},
}};
// Parts of 17 v 17 player-1 wins: einz, opponent busts, higher score.
inline constexpr std::array<double, 3> table3_parts{0.092, 0.196, 0.114};

// Three stand-17 players: seat wins and the tie.
inline constexpr std::array<double, 3> three_player_wins{0.1966, 0.1881, 0.3494};
inline constexpr double three_player_tie = 0.2659;

// Table 4: stand17 rows (columns 17..20), stand18 rows (columns 18..20).
inline constexpr std::array<std::array<double, 4>, 4> table4_17{{
    {0.350, 0.262, 0.233, 0.156},
    {0.326, 0.295, 0.225, 0.154},
    {0.230, 0.241, 0.322, 0.207},
    {0.227, 0.205, 0.295, 0.273},
}};
inline constexpr std::array<std::array<double, 3>, 4> table4_18{{
    {0.403, 0.358, 0.239},
    {0.411, 0.344, 0.245},
    {0.273, 0.429, 0.299},
    {0.205, 0.409, 0.386},
}};

// Table 5: columns 2v3 2v4 2v5 3v4 3v5 4v5; rows p1 wins, tied, p2 wins.
inline constexpr std::array<std::array<double, 6>, 3> table5{{
    {0.361, 0.293, 0.273, 0.296, 0.276, 0.344},
    {0.268, 0.251, 0.244, 0.250, 0.243, 0.253},
    {0.371, 0.456, 0.483, 0.454, 0.481, 0.403},
}};
inline constexpr double standing_2v3_player = 0.629;

// Table 6: rows 17-20 17-einz 18-20 18-einz; columns 2 3 4 5 any.
inline constexpr std::array<std::array<double, 5>, 4> table6{{
    {18.156, 18.207, 18.506, 18.614, 18.332},
    {18.571, 18.608, 18.841, 18.981, 18.707},
    {18.836, 18.834, 19.026, 19.182, 18.943},
    {19.256, 19.295, 19.417, 19.621, 19.369},
}};

// Keeping a 14 made of 10 and 4, one deck.
inline constexpr double keep14_stand17 = 0.624;
inline constexpr double keep14_stand18 = 0.514;

// Dealer games.
inline constexpr double v2_player_stand17 = 0.480;
inline constexpr double v2_player_stand18 = 0.458;
inline constexpr double v3_dealer = 0.563;

// Eight-deck situations.
inline constexpr double s2_vs18_stand_win = 0.45;
inline constexpr double s2_vs18_stand_lose = 0.55;
inline constexpr double s2_vs18_hit_win = 0.357;
inline constexpr double s2_vs18_hit_tie = 0.067;
inline constexpr double s2_vs18_hit_lose = 0.576;
inline constexpr double s2_vs17_stand_win = 0.355;
inline constexpr double s2_vs17_stand_lose = 0.645;
inline constexpr double s2_vs17_hit_win = 0.385;
inline constexpr double s2_vs17_hit_tie = 0.061;
inline constexpr double s2_vs17_hit_lose = 0.554;
inline constexpr double s3_v2_stand = 0.516;
inline constexpr double s3_v2_hit = 0.437;
inline constexpr double s3_v3_stand = 0.45;
inline constexpr double s3_v3_hit = 0.427;

}  // namespace reference
