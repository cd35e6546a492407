#include "cosbench/dataset_adapter.hpp"

// The five fixed spatial-QA demonstrations per prompting mode. Golden text:
// wording, symbols and irregularities are preserved exactly as shipped.

namespace cosbench {
namespace adapter {

namespace {

std::vector<ExternalDemo> make_cot_demos() {
    std::vector<ExternalDemo> demos;

    demos.push_back(ExternalDemo{
        "There are three blocks called A, B, and C. In block A, there is a small blue square far "
        "above a small blue circle. There is a small black triangle far to the right of both small "
        "blue objects. The black triange is near and above a medium blue square. The medium blue "
        "square is touching the right edge of A and is near and above a medium black circle. Near "
        "and to the right of the medium black circle is a medium yellow triangle. The yellow "
        "triangle is to the left of the small blue circle. In B, which is to the right of A, there "
        "is a large blue square near and to the left of a large yellow triangle. There is also a "
        "small yellow triangle far below the square. In C, which is to the right of B. there is a "
        "small yellow circle near and above a small yellow triangle. The small yellow triangle is "
        "touching the top of a medium black triangle. The black triangle is touching the right "
        "edge of C. There is a large blue circle far below the black triangle.",
        "Are all yellow objects in C above a blue thing?",
        {"Yes", "No", "Do not Know"},
        "Let's analyze the information provided step by step:\n"
        "In block C:\n"
        "    1. There a small yellow circle near and above a small yellow triangle.\n"
        "    2. The small yellow triangle is touching the top of a medium black triangle.\n"
        "    3. There is a large blue circle far below the black triangle.\n"
        "Based on the provided information, the small yellow circle and the small yellow triangle "
        "in Block C are indeed above a blue thing, which is the large blue circle.",
        "So, the correct answer is: \"Yes\"."});

    demos.push_back(ExternalDemo{
        "There are three blocks called A, B, and C. A is to the left of B and B is to the left of "
        "C. In A, there is a small black triangle near and ot the left of a large blue circle. The "
        "large blue circle is near and to the left of a small blue circle. The small blue square "
        "is far below a medium yellow square. In B, there is a small yellow circle. In C, there is "
        "a medium black triangle that is near and to the left of a small yellow circle. The small "
        "yellow circle is near and to the left of a blue triangle. There is a large yellow square "
        "touching the bottom of the small yellow circle. Near and below the large yellow square is "
        "a large black square.",
        "What is the relation between the large black thing and the small yellow thing?",
        {"left", "right", "above", "below", "near to", "far from", "touching", "Do Not Know"},
        "Let's analyze the information provided step by step:\n"
        "In block C:\n"
        "    1. There is a medium black triangle that is near and to the left of a small yellow "
        "circle.\n"
        "    2. The small yellow circle is near and to the left of a blue triangle.\n"
        "    3. There is a large yellow square touching the bottom of the small yellow circle.\n"
        "    4. Near and below the large yellow square is a large black square.\n"
        "Now, let's determine the relation between the \"large black thing\" (large black square) "
        "and the \"small yellow thing\" (small yellow circle):\n"
        "    1. The large black square is in block C, and it is described as being \"near and "
        "below\" the large yellow square.\n"
        "    2. The small yellow circle is also in block C, and it is described as being \"near "
        "and to the left of\" the medium black triangle.\n"
        "Based on the provided information, the large black square is below the large yellow "
        "square and the small yellow circle is near to the medium black triangle.",
        "So, the correct answer: \"below\" and \"near to\"."});

    demos.push_back(ExternalDemo{
        "There are three blocks called A, B, and C. A is to the right of B and B is to the right "
        "of C. In A, there is a medium black circe that is far to the right of a medium blue "
        "square. The medium blue square is near and to the right of a small yellow circle. Far "
        "above the blue square is a medium yellow triangle. Near above the medium triangle is a "
        "small blue circle. In B, there is a large blue square that is touching the right edge of "
        "B. There is a medium black triangle that is touching the left side of the blue square. "
        "Near and above the medium black triangle is a large blue circle. Near and above the large "
        "blue circle is a large yellow triangle. In C, there is a small yellow triangle near and "
        "to the right of a medium black circle. The yellow triangle is touching the right edge of "
        "C. Far to the left of the medium black circle is a small blue square.",
        "What block does not have any objects touching the edge of it?",
        {"A", "B", "C"},
        "Let's analyze the information provided step by step:\n"
        "In block A:\n"
        "    1. There is a medium black circle, which is far to the right of a medium blue "
        "square.\n"
        "    2. The medium blue square is near and to the right of a small yellow circle.\n"
        "    3. Far above the blue square is a medium yellow triangle.\n"
        "    4. Near above the medium triangle is a small blue circle.\n"
        "In block B:\n"
        "    1. There is a large blue square that is touching the right edge of B.\n"
        "    2. There is a medium black triangle that is touching the left side of the blue "
        "square.\n"
        "    3. Near and above the medium black triangle is a large blue circle.\n"
        "    4. Near and above the large blue circle is a large yellow triangle.\n"
        "In block C:\n"
        "    1. There is a small yellow triangle near and to the right of a medium black circle.\n"
        "    2. The yellow triangle is touching the right edge of C.\n"
        "    3. Far to the left of the medium black circle is a small blue square.\n"
        "Based on the provided information, it's Block A, which does not have any objects touching "
        "its edge.",
        "So, the correct answer is: \"A\"."});

    demos.push_back(ExternalDemo{
        "There are three blocks called A, B, and C. A is to the left of B and B is to the left of "
        "C. In A, there is a large black triangle far above a medium black triangle. The medium "
        "black triangle is near and above a large yellow circle. Near and to the right of the "
        "large circle is a small blue circle. In B, there is a medium blue circle near and to the "
        "left of a small black square. Far below the blue circle is a small yellow circle. In C, "
        "there is a small blue square.",
        "What object is near the large yellow thing, the medium black triangle or the small blue "
        "circle the medium black triangle  or  the smal blue circle?",
        {"the medium black triangle", "the smal blue circle", "both of them", "none of them"},
        "Let's analyze the information provided step by step:\n"
        "In lock A:\n"
        "    1.There is a large black triangle far above a medium black triangle.\n"
        "    2. The medium black triangle is near and above a large yellow circle.\n"
        "    3. Near and to the right of the large circle is a small blue circle.\n"
        "In block B:\n"
        "    1. There is a medium blue circle near and to the left of a small black square.\n"
        "    2. Far below the blue circle is a small yellow circle.\n"
        "In block C:\n"
        "    1. There is a small blue square.\n"
        "Now, let's analyze the position of the large yellow circle:\n"
        "    1. The large yellow circle is in Block A and is near and above the medium black "
        "triangle.\n"
        "    2. The small blue circle is also in Block A and is near and to the right of the large "
        "yellow circle.\n"
        "Based on the provided information, both the medium black triangle and the small blue "
        "circle are near the large yellow circle in Block A.",
        "So, the correct answer is: \"both of them\"."});

    demos.push_back(ExternalDemo{
        "There are three blue shapes in a block that we called A. Two medium blue squares are "
        "below a big blue square. First medium blue square is to the left of the other medium one "
        "which is touching the bottom edge of block A. There is another block below the block A we "
        "call it B. A big blue triangle is touching the top edge of this block which is above a "
        "small black triangle, a big blue circle and a medium blue triangle. The medium triangle "
        "is touching the bottom edge of the block. The circle is below and to the left of the "
        "small triangle. It is above the medium triangle.",
        "Is the small triangle below the medium triangle?",
        {"Yes", "No", "Do not Know"},
        "Let's analyze the information provided step by step:\n"
        "In block B:\n"
        "    1. A big blue triangle is touching the top edge of this block which is above a small "
        "black triangle, a big blue circle and a medium blue triangle.\n"
        "    2. The medium triangle is touching the bottom edge of the block.\n"
        "    3. The circle is below and to the left of the small triangle. It is above the medium "
        "triangle.\n"
        "Based on the provided information, the small black triangle is above the medium blue "
        "triangle.",
        "So, the correct answer is: \"No\"."});

    return demos;
}

std::vector<ExternalDemo> make_cos_demos() {
    std::vector<ExternalDemo> demos;

    demos.push_back(ExternalDemo{
        "There are three blocks called A, B, and C. In block A, there is a small blue square far "
        "above a small blue circle. There is a small black triangle far to the right of both small "
        "blue objects. The black triangle is near and above a medium blue square. The medium blue "
        "square is touching the right edge of A and is near and above a medium black circle. Near "
        "and to the right of the medium black circle is a medium yellow triangle. The yellow "
        "triangle is to the left of the small blue circle. In B, which is to the right of A, there "
        "is a large blue square near and to the left of a large yellow triangle. There is also a "
        "small yellow triangle far below the square. In C, which is to the right of B. There is a "
        "small yellow circle near and above a small yellow triangle. The small yellow triangle is "
        "touching the top of a medium black triangle. The black triangle is touching the right "
        "edge of C. There is a large blue circle far below the black triangle.",
        "Are all yellow objects in C above a blue thing?",
        {"Yes", "NO", "Do not Know"},
        "Let's analyze the information provided step by step to determine if all yellow objects "
        "in Block C are above a blue thing:\n"
        "C:\n"
        "1. (small, yellow, circle) ~\u2191 (small, yellow, triangle)\n"
        "2. (small, yellow, triangle) = top of (medium, black, triangle)\n"
        "3. (large, blue, circle) \u221e\u2193 (medium, black, triangle).\n"
        "Based on the provided information, C: (small, yellow, circle) \u2191 (large, blue, "
        "circle) and (small, yellow, triangle) \u2191 (large, blue, circle).",
        "So, the correct answer is: \"Yes\"."});

    demos.push_back(ExternalDemo{
        "There are three blocks called A, B, and C. A is to the left of B and B is to the left of "
        "C. In A, there is a small black triangle near and to the left of a large blue circle. The "
        "large blue circle is near and to the left of a small blue circle. The small blue square "
        "is far below a medium yellow square. In B, there is a small yellow circle. In C, there is "
        "a medium black triangle that is near and to the left of a small yellow circle. The small "
        "yellow circle is near and to the left of a blue triangle. There is a large yellow square "
        "touching the bottom of the small yellow circle. Near and below the large yellow square is "
        "a large black square.",
        "What is the relation between the large black thing and the small yellow thing?",
        {"left", "right", "above", "below", "near to", "far from", "touching", "Do Not Know"},
        "Let's break down the relationships between the objects step by step:\n"
        "A:\n"
        "1. (small, black, triangle) ~< (large, blue, circle)\n"
        "2. (large, blue, circle) ~< (small, blue, circle)\n"
        "3. (small, blue, square) \u221e\u2193 (medium, yellow, square)\n"
        "B:\n"
        "1. (small, yellow, circle)\n"
        "C:\n"
        "1. (medium, black, triangle) ~< (small, yellow, circle)\n"
        "2. (small, yellow, circle) ~< (blue, triangle)\n"
        "3. (large, yellow, square) =\u2193 (small, yellow, circle)\n"
        "4. (large, black, square) ~\u2193 (large, yellow, square)\n"
        "Now, let's determine the relation between the (large, black, square) and the (small, "
        "yellow, circle):\n"
        "1. C: (large, black, square) ~\u2193 (large, yellow, square). Therefore, (large, black, "
        "square) \u2193 (large, yellow, square)\n"
        "2. C: (small, yellow, circle) ~< (medium, black, triangle). Therefore, (small, yellow, "
        "circle) ~ (medium, black, triangle)",
        "So, the correct answer: \"below\" and \"near to\"."});

    demos.push_back(ExternalDemo{
        "There are three blocks called A, B, and C. A is to the right of B and B is to the right "
        "of C. In A, there is a medium black circle that is far to the right of a medium blue "
        "square. The medium blue square is near and to the right of a small yellow circle. Far "
        "above the blue square is a medium yellow triangle. Near the medium triangle is a small "
        "blue circle. In B, there is a large blue square that is touching the right edge of B. "
        "There is a medium black triangle that is touching the left side of the blue square. Near "
        "and above the medium black triangle is a large blue circle. Near and above the large blue "
        "circle is a large yellow triangle. In C, there is a small yellow triangle near and to the "
        "right of a medium black circle. The yellow triangle is touching the right edge of C. Far "
        "to the left of the medium black circle is a small blue square.",
        "What block does not have any objects touching the edge of it?",
        {"A", "B", "C"},
        "Let's analyze each block step by step to determine which one does not have any objects "
        "touching its edge:\n"
        "A:\n"
        "1. (medium, black, circle) \u221e> (medium, blue, square).\n"
        "2. (medium, blue, square) ~> (small, yellow, circle).\n"
        "3. (medium, yellow, triangle) \u221e\u2191 (blue, square).\n"
        "4. (small, blue, circle) ~\u2191 (medium, triangle).\n"
        "B:\n"
        "1. (large, blue, square) => edge of B.\n"
        "2. (medium, black, triangle) =< (blue, square).\n"
        "3. (large, blue, circle) ~\u2191 (medium, black, triangle).\n"
        "4. (large, yellow, triangle) ~\u2191 (large, blue, circle).\n"
        "C:\n"
        "1. (small, yellow, triangle) ~> (medium, black, circle).\n"
        "2. (yellow, triangle) => edge of C.\n"
        "3. (small, blue, square) \u221e< (medium, black, circle).\n"
        "Based on the provided information,, let's determine which block does not have any "
        "objects touching its edge. It's Block B.",
        "So, the correct answer is: \"A\"."});

    demos.push_back(ExternalDemo{
        "There are three blocks called A, B, and C. A is to the left of B and B is to the left of "
        "C. In A, there is a large black triangle far above a medium black triangle. The medium "
        "black triangle is near and above a large yellow circle. Near and to the right of the "
        "large circle is a small blue circle. In B, there is a medium blue circle near and to the "
        "left of a small black square. Far below the blue circle is a small yellow circle. In C, "
        "there is a small blue square.",
        "What object is near the large yellow thing, the medium black triangle the small blue "
        "circle the medium black triangle or the small blue circle?",
        {"the medium black triangle", "the small blue circle", "both of them", "none of them"},
        "Let's break down the information step by step to determine which object is near the "
        "large yellow circle, the medium black triangle, or the small blue circle:\n"
        "A:\n"
        "1. (large, black, triangle) \u221e\u2191 (medium, black, triangle).\n"
        "2. (medium, black, triangle) ~\u2191 (large, yellow, circle).\n"
        "3. (small, blue, circle) ~> (large, circle).\n"
        "B:\n"
        "1. (medium, blue, circle) ~< (small, black, square).\n"
        "2. (small, yellow, circle) \u221e\u2193 (blue, circle).\n"
        "C:\n"
        "1. there is a small blue square.\n"
        "Now, let's analyze the position of the (large, yellow, circle):\n"
        "1. A: (large, yellow, circle) ~\u2191 (medium, black, triangle).\n"
        "2. A: (small, blue, circle) ~> (large, yellow, circle).\n"
        "Based on the provided information, A: (medium, black, triangle) ~ (large, yellow, "
        "circle) and  (small, blue, circle) ~ (large, yellow, circle).",
        "So, the correct answer is: \"both of them\"."});

    demos.push_back(ExternalDemo{
        "There are three blue shapes in a block that we call A. Two medium blue squares are below "
        "a big blue square. The first medium blue square is to the left of the other medium one "
        "which is touching the bottom edge of block A. There is another block below block A we "
        "call it B. A big blue triangle is touching the top edge of this block which is above a "
        "small black triangle, a big blue circle and a medium blue triangle. The medium triangle "
        "is touching the bottom edge of the block. The circle is below and to the left of the "
        "small triangle. It is above the medium triangle.",
        "Is the small triangle below the medium triangle?",
        {"Yes", "NO", "Do not Know"},
        "Let's analyze the arrangement of objects in block B to determine if the small triangle "
        "is below the medium triangle:\n"
        "B:\n"
        "1. (big, blue, triangle) = top edge of B\n"
        "2. (big, blue, triangle) \u2191 (small, black, triangle), (big, blue, circle) and "
        "(medium, blue, triangle)\n"
        "2. (big, blue, circle) \u2193< (small, black, triangle)\n"
        "3. (big, blue, circle) ~\u2193 (big, blue, triangle)\n"
        "4. (medium, blue, triangle) = bottom edge B\n"
        "Based on the provided information, the small black triangle is above the medium blue "
        "triangle.",
        "So, the correct answer is: \"No.\""});

    return demos;
}

} // namespace

const std::vector<ExternalDemo>& external_demo_set(PromptMode mode) {
    static const std::vector<ExternalDemo> cot = make_cot_demos();
    static const std::vector<ExternalDemo> cos = make_cos_demos();
    switch (mode) {
        case PromptMode::FewShotCoT: return cot;
        case PromptMode::FewShotCoS: return cos;
        case PromptMode::ZeroShotCoT:
            throw ConfigError("external QA demonstrations exist for few-shot modes only");
    }
    throw std::logic_error("bad mode");
}

} // namespace adapter
} // namespace cosbench
