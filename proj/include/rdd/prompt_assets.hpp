#pragma once

// Packaged prompt templates and in-context example sets (asset version v1).
// The text is data, not code: it is exactly what gets sent to the model, so
// whitespace and wording are significant. Each literal starts with one
// newline for source readability; the loader strips it.

#include <string_view>

namespace rdd::assets {

inline constexpr std::string_view kVersion = "v1";

inline constexpr std::string_view kTemplateUnitCot = R"__rdd__(
Your task is to solve the problem below. You can reason about the problem before stating your answer. The answer MUST be between the following tags: <ANSWER>...</ANSWER>. An example is provided to showcase how to use the tags; you must only solve the last problem given.

## Examples

{examples}

## Problem

Problem: {problem}
Answer: Let's think step by step.)__rdd__";

inline constexpr std::string_view kTemplateUnitLtm = R"__rdd__(
Your task is to solve the problem below. You can reason about the problem before stating your answer. The answer MUST be between the following tags: <ANSWER>...</ANSWER>. An example is provided to showcase how to use the tags; you must only solve the last problem given.

## Examples

{examples}

## Problem

Problem: {problem}
Answer:)__rdd__";

inline constexpr std::string_view kTemplateDecompose = R"__rdd__(
You manage {width} workers. Your task is to decompose the problem below in order to delegate sub-problems to your workers. The decomposition must be complete: combining the solutions to the sub-problems must be enough to solve the original problem. You must be brief and clear. You must consider that all sub-problems must be solved independently and that merging their solutions should produce the solution to the original problem. Do not attempt to solve the sub-problems.

If the problem is simple enough to be solved by a single worker, you must only output "This is a unit problem". Otherwise, you must propose sub-problems in a bullet list. In each bullet point, provide all necessary information for a worker to solve the sub-problem. The workers will not be provided with the original problem description nor the other sub-problems. Therefore, you must include all necessary data and instructions in the description of each sub-problem. You must only use from one up to {width} of the workers, never more than {width} workers. The sub-problems you generate can be still complex; they will be decomposed again by your workers if necessary.

You can decompose the task via either the "data decomposition strategy" or the "task decomposition strategy":

- The data decomposition strategy produces sub-problems describing exactly the same data transformation given in the original problem, applied to partitions of the input data. The partitions of the input data must be of approximately equal size. The sub-problem descriptions must be exactly the same as the description of the original problem.
- The task decomposition strategy produces sub-problems describing different data transformations, applied to exactly the same input data given in the original problem. For example, the sub-problem transformations may describe sub-steps required to solve the original problem.

Examples are provided below to illustrate some decompositions; you must only provide a decomposition for the last problem.

## Examples

{examples}

## Problem

Problem: {problem}
Answer:)__rdd__";

inline constexpr std::string_view kTemplateDecomposeWithDeps = R"__rdd__(
You manage {width} workers. Your task is to decompose the problem below in order to delegate sub-problems to your workers. You must only use from one up to {width} of the workers, never more than {width} workers. The decomposition must be complete: combining the solutions to the sub-problems must be enough to solve the original problem. You must be brief and clear. Do not attempt to solve the sub-problems.

If the problem is simple enough to be solved by a single worker, you must only output "This is a unit problem". Otherwise, you must propose sub-problems in a bullet list. The workers will not be provided with the original problem description nor the other sub-problem descriptions. Therefore, you must include all necessary data and instructions in the description of each sub-problem. You must never reference the original problem and you must not assume the workers can access its description and input data; instead, you must copy all relevant instructions and input data to the descriptions of sub-problems when necessary. The sub-problems you generate can be still complex; they will be decomposed again by your workers if necessary.

You can decompose the task via either the "data decomposition strategy" or the "task decomposition strategy":

- The data decomposition strategy produces sub-problems describing exactly the same data transformation given in the original problem, applied to partitions of the input data. The partitions of the input data must be of approximately equal size. The sub-problem descriptions must be exactly the same as the description of the original problem.
- The task decomposition strategy produces sub-problems describing different data transformations, applied to exactly the same input data given in the original problem. For example, the sub-problem transformations may describe sub-steps required to solve the original problem.

Each sub-problem must have a unique identifier given between square brackets before the sub-problem description. If you need to, you can also specify dependencies: within each sub-problem's description, you can refer to the solutions to other sub-problems using their identifiers between curly braces. Sub-problems cannot have the original problem as a dependency. The scheduler will substitute the identifiers of the dependencies with their solutions before sending the sub-problems to the workers. All dependencies stated between curly braces must also be sub-problems present in your bullet list.

The examples below illustrate some decompositions. You must only provide a decomposition for the last problem, do not attempt to decompose the examples.

## Examples

{examples}

## Problem

Problem: {problem}
Answer:)__rdd__";

inline constexpr std::string_view kTemplateMerge = R"__rdd__(
The problem below was decomposed into sub-problems. The sub-problems and their sub-solutions are provided in bullet points below the problem. Your task is to solve the problem with the help of the sub-solutions. Often, obtaining the final solution to the problem only requires you to apply a transformation to the sub-solutions. If you find any mistakes in the sub-solutions, you can fix the mistakes while you merge the sub-solutions.

You must reason about how to merge the sub-solutions and solve the problem before stating your final answer. The final answer MUST be between the following tags: <ANSWER>...</ANSWER>. Some examples are provided to showcase how to use the tags and to illustrate some merging strategies; you must only solve the last problem.

## Examples

{examples}

## Problem

Problem: {problem}
{subsolutions}
Answer: )__rdd__";

// Sentence removed from the merge prompt when error recovery is disabled.
inline constexpr std::string_view kRecoverySentence =
    "If you find any mistakes in the sub-solutions, you can fix the mistakes while you merge "
    "the sub-solutions.";

// Tie-break prompt for self-consistency voting. Not part of the published
// prompt set; candidates are embedded in the problem block by the caller.
inline constexpr std::string_view kTemplateVote = R"__rdd__(
The problem below has been solved several times and two of the resulting candidate answers are listed after the problem statement. Your task is to select the candidate answer that is the most consistent and the most likely to be correct. You can reason about the candidate answers before stating your choice. You must choose exactly one candidate: answer 1 for the first candidate or 2 for the second candidate. The answer MUST be between the following tags: <ANSWER>...</ANSWER>.

## Problem

{problem}
Answer:)__rdd__";

struct RawShot {
    std::string_view input;
    std::string_view target;
};

// Unit-solving examples, letter concatenation task.
inline constexpr RawShot kLetterConcatCot[] = {
    {R"__rdd__(
Concatenate using a space the characters at index 1 of each word in the list [Gladys, Rathav, Miya]; indices start at zero.)__rdd__",
     R"__rdd__(
Let's think step by step. The characters at index 1 in the input words are "l", "a" and "i". If we concatenate these, we get the answer <ANSWER>"l a i"</ANSWER>.)__rdd__"},
    {R"__rdd__(
Concatenate using a space the characters at index 3 of each word in the list [Gloria, Ricardo, Kanwar, Chon, Manoj, Enrique, Xiong, Shaw]; indices start at zero.)__rdd__",
     R"__rdd__(
Let's think step by step. The characters at index 3 in the input words are "r", "a", "w", "n", "o", "i", "n" and "w". If we concatenate these, we get the answer <ANSWER>"r a w n o i n w"</ANSWER>.)__rdd__"},
    {R"__rdd__(
Concatenate using a space the characters at index 0 of each word in the list [Olga, Cynthia, Gladys, Cynthia, Aliyu]; indices start at zero.)__rdd__",
     R"__rdd__(
Let's think step by step. The characters at index 0 in the input words are "O", "C", "G", "C" and "A". If we concatenate these, we get the answer <ANSWER>"O C G C A"</ANSWER>.)__rdd__"},
    {R"__rdd__(
Concatenate using a space the characters at index 3 of each word in the list [Wilson]; indices start at zero.)__rdd__",
     R"__rdd__(
Let's think step by step. The characters at index 3 in the input words are "s". If we concatenate these, we get the answer <ANSWER>"s"</ANSWER>.)__rdd__"},
    {R"__rdd__(
Concatenate using a space the characters at index 2 of each word in the list [Ilya, Jacques, Francesco, Samuel, Jadhav, Rivera, Irma, Jianping, Samuel, Christian]; indices start at zero.)__rdd__",
     R"__rdd__(
Let's think step by step. The characters at index 2 in the input words are "y", "c", "a", "m", "d", "v", "m", "a", "m" and "r". If we concatenate these, we get the answer <ANSWER>"y c a m d v m a m r"</ANSWER>.)__rdd__"},
};

// Generic unit-solving examples.
inline constexpr RawShot kGenericCot[] = {
    {R"__rdd__(
Who is younger: Michael Jordan, Cristiano Ronaldo or Usain Bolt?
- Sub-problem 1: How old is Cristiano Ronaldo? Sub-solution 1: 39 years old.
- Sub-problem 2: How old is Michael Jordan? Sub-solution 2: 61 years old.
- Sub-problem 3: How old is Usain Bolt? Sub-solution 3: 37 years old.)__rdd__",
     R"__rdd__(
Let's think step by step. We must compare the ages of each person: (Michael Jordan, 61) > (Cristiano Ronaldo, 39) > (Usain Bolt, 37). The answer must be the person with the lowest age. Thus, the solution is <ANSWER>Usain Bolt</ANSWER>)__rdd__"},
    {R"__rdd__(
Peter had 3 apples, 7 oranges and 12 pears. He gave 1 apple to John, 4 oranges to Maria and 3 pears to Ana. How many pieces of fruit does Peter have left?)__rdd__",
     R"__rdd__(
Let's think step by step. If Peter has 3 apples and gives 1 to John, he will lose 1 apple. If Peter has 7 oranges and gives 4 to Maria, he will lose 4 oranges. If Peter has 12 pears and gives 3 to Ana, he will lose 3 pears. Thus, the solution is 3 - 1 + 7 - 4 + 12 - 3 = <ANSWER>14</ANSWER>)__rdd__"},
    {R"__rdd__(
What is ((((5 + 4) * 100) + 267) / (3 * 10))?)__rdd__",
     R"__rdd__(
Let's think step by step. 5 + 4 = 9. 9 * 100 = 900. 900 + 267 = 1167. 3 * 10 = 30. Thus, the answer is 1167 / 30 = <ANSWER>38.9</ANSWER>)__rdd__"},
    {R"__rdd__(
Which word in the list [hush, oceanic, surge, present, lie, wry, giraffe, dine, guide, urge, complete, tasteless, glorious, bird, raspy, murky, zoom, juice, select, liquid, hope, install, complete, aromatic, oceanic, fish, excited, fabricator, internal, dinosaurs, noiseless, partner] is longer?)__rdd__",
     R"__rdd__(
Let's think step by step. The lengths of each word are (hush, 4), (oceanic, 7), (surge, 5), (present, 7), (lie, 3), (wry, 3), (giraffe, 7), (dine, 4), (guide, 5), (urge, 4), (complete, 8), (tasteless, 9), (glorious, 8), (bird, 4), (raspy, 5), (murky, 5), (zoom, 4), (juice, 5), (select, 6), (liquid, 6), (hope, 4), (install, 7), (complete, 8), (aromatic, 8), (oceanic, 7), (fish, 4), (excited, 7), (fabricator, 10), (internal, 8), (dinosaurs, 9), (noiseless, 9) and (partner, 7). Thus, the solution is <ANSWER>fabricator</ANSWER>)__rdd__"},
    {R"__rdd__(
Is the following sports-related sentence plausible? "Joao Moutinho caught the screen pass in the NFC championship.")__rdd__",
     R"__rdd__(
Joao Moutinho is a soccer player. The NFC championship is part of American football, not soccer. Thus, the answer is <ANSWER>no</ANSWER>)__rdd__"},
};

// Unit-solving examples in incremental style, letter concatenation task.
inline constexpr RawShot kLetterConcatLtm[] = {
    {R"__rdd__(
Concatenate using a space the characters at index 1 of each word in the list [Gladys, Rathav, Miya]; indices start at zero.)__rdd__",
     R"__rdd__(
The letters at index 1 of "Gladys" and "Rathav" are "l" and "a". Concatenating "l" and "a" leads to "l a". The letter at index 1 of "Miya" is "i". Concatenating "l a" and "i" leads to <ANSWER>"l a i"</ANSWER>.)__rdd__"},
    {R"__rdd__(
Concatenate using a space the characters at index 3 of each word in the list [Gloria, Ricardo, Kanwar, Chon, Manoj, Enrique, Xiong, Shaw]; indices start at zero.)__rdd__",
     R"__rdd__(
The letters at index 3 of "Gloria" and "Ricardo" are "r" and "a". Concatenating "r" and "a" leads to "r a". The letter at index 3 of "Kanwar" is "w". Concatenating "r a" and "w" leads to "r a w". The letter at index 3 of "Chon" is "n". Concatenating "r a w" and "n" leads to "r a w n". The letter at index 3 of "Manoj" is "o". Concatenating "r a w n" and "o" leads to "r a w n o". The letter at index 3 of "Enrique" is "i". Concatenating "r a w n o" and "i" leads to "r a w n o i". The letter at index 3 of "Xiong" is "n". Concatenating "r a w n o i" and "n" leads to "r a w n o i n". The letter at index 3 of "Shaw" is "w". Concatenating "r a w n o i n" and "w" leads to <ANSWER>"r a w n o i n w"</ANSWER>.)__rdd__"},
    {R"__rdd__(
Concatenate using a space the characters at index 0 of each word in the list [Olga, Cynthia, Gladys, Cynthia, Aliyu]; indices start at zero.)__rdd__",
     R"__rdd__(
The letters at index 0 of "Olga" and "Cynthia" are "O" and "C". Concatenating "O" and "C" leads to "O C". The letter at index 0 of "Gladys" is "G". Concatenating "O C" and "G" leads to "O C G". The letter at index 0 of "Cynthia" is "C". Concatenating "O C G" and "C" leads to "O C G C". The letter at index 0 of "Aliyu" is "A". Concatenating "O C G C" and "A" leads to <ANSWER>"O C G C A"</ANSWER>.)__rdd__"},
    {R"__rdd__(
Concatenate using a space the characters at index 3 of each word in the list [Wilson]; indices start at zero.)__rdd__",
     R"__rdd__(
The letter at index 3 of "Wilson" is <ANSWER>"s"</ANSWER>.)__rdd__"},
    {R"__rdd__(
Concatenate using a space the characters at index 2 of each word in the list [Ilya, Jacques, Francesco, Samuel, Jadhav, Rivera, Irma, Jianping, Samuel, Christian]; indices start at zero.)__rdd__",
     R"__rdd__(
The letters at index 2 of "Ilya" and "Jacques" are "y" and "c". Concatenating "y" and "c" leads to "y c". The letter at index 2 of "Francesco" is "a". Concatenating "y c" and "a" leads to "y c a". The letter at index 2 of "Samuel" is "m". Concatenating "y c a" and "m" leads to "y c a m". The letter at index 2 of "Jadhav" is "d". Concatenating "y c a m" and "d" leads to "y c a m d". The letter at index 2 of "Rivera" is "v". Concatenating "y c a m d" and "v" leads to "y c a m d v". The letter at index 2 of "Irma" is "m". Concatenating "y c a m d v" and "m" leads to "y c a m d v m". The letter at index 2 of "Jianping" is "a". Concatenating "y c a m d v m" and "a" leads to "y c a m d v m a". The letter at index 2 of "Samuel" is "m". Concatenating "y c a m d v m a" and "m" leads to "y c a m d v m a m". The letter at index 2 of "Christian" is "r". Concatenating "y c a m d v m a m" and "r" leads to <ANSWER>"y c a m d v m a m r"</ANSWER>.)__rdd__"},
};

// Decomposition examples, letter concatenation task.
inline constexpr RawShot kLetterConcatDecompose[] = {
    {R"__rdd__(
Concatenate using a space the characters at index 1 of each word in the list [Dong]; indices start at zero.)__rdd__",
     R"__rdd__(
This is a unit problem.)__rdd__"},
    {R"__rdd__(
Concatenate using a space the characters at index 2 of each word in the list [Shimizu, Hoang, Muhammad, Mejia, Fernandes, Punam, Cesar]; indices start at zero.)__rdd__",
     R"__rdd__(
- Concatenate using a space the characters at index 2 of each word in the list [Shimizu, Hoang, Muhammad, Mejia]; indices start at zero.
- Concatenate using a space the characters at index 2 of each word in the list [Fernandes, Punam, Cesar]; indices start at zero.)__rdd__"},
    {R"__rdd__(
Concatenate using a space the characters at index 2 of each word in the list [Lawal, Jadhav, Sekha, Jadhav, Abraham, Sushila, Hoang, Gerhard, Heinz]; indices start at zero.)__rdd__",
     R"__rdd__(
- Concatenate using a space the characters at index 2 of each word in the list [Lawal, Jadhav, Sekha, Jadhav]; indices start at zero.
- Concatenate using a space the characters at index 2 of each word in the list [Abraham, Sushila, Hoang, Gerhard]; indices start at zero.
- Concatenate using a space the characters at index 2 of each word in the list [Heinz]; indices start at zero.)__rdd__"},
    {R"__rdd__(
Concatenate using a space the characters at index 2 of each word in the list [Kailash, Ouattara, Kasongo, Perez, Jyoti]; indices start at zero.)__rdd__",
     R"__rdd__(
This is a unit problem.)__rdd__"},
    {R"__rdd__(
Concatenate using a space the characters at index 0 of each word in the list [Guan, Madina, Mejia, Herrera, Christopher, Sergey, Karina, Lucy, Ortega, Vera, Mallik, Weimin, Kwon, Zhan, Shaw, Tahir, Chang, Halyna, Weidong, Ochoa, Dung, George, Nayak, Jianming, Paola, Awad, Nabil, Garba, Amal, Sergey, Mustapha, Garcia, Bello, Sergey, Otieno, Rojas, Andrew, Mustafa, Haji, Philip, Leticia, Syed, Blanca, Mahendra, Salim, Ghulam, Quan, Yanhua, Artyom, Muhammad]; indices start at zero.)__rdd__",
     R"__rdd__(
- Concatenate using a space the characters at index 0 of each word in the list [Guan, Madina, Mejia, Herrera, Christopher, Sergey, Karina, Lucy, Ortega, Vera, Mallik, Weimin]; indices start at zero.
- Concatenate using a space the characters at index 0 of each word in the list [Kwon, Zhan, Shaw, Tahir, Chang, Halyna, Weidong, Ochoa, Dung, George, Nayak, Jianming]; indices start at zero.
- Concatenate using a space the characters at index 0 of each word in the list [Paola, Awad, Nabil, Garba, Amal, Sergey, Mustapha, Garcia, Bello, Sergey, Otieno, Rojas]; indices start at zero.
- Concatenate using a space the characters at index 0 of each word in the list [Andrew, Mustafa, Haji, Philip, Leticia, Syed, Blanca, Mahendra, Salim, Ghulam, Quan, Yanhua, Artyom, Muhammad]; indices start at zero.)__rdd__"},
};

// Generic decomposition examples (independent sub-problems).
inline constexpr RawShot kGenericDecompose[] = {
    {R"__rdd__(
If Peter has 3 apples and gives 1 to John, how many apples does Peter have left?)__rdd__",
     R"__rdd__(
This problem is simple enough to be solved directly by a single mathematical operation. <ANSWER>This is a unit problem.</ANSWER>)__rdd__"},
    {R"__rdd__(
What is ((((5 + 4) * 100) + 267) / (3 * 10))?)__rdd__",
     R"__rdd__(
We can use the data decomposition strategy here by splitting the input formula into sub-formulas. We can use two workers. The merged solution will be $sub_solution_1 / sub_solution_2$.
<ANSWER>- What is ((5 + 4) * 100) + 267?
- What is 3 * 10?</ANSWER>)__rdd__"},
    {R"__rdd__(
What is the result of log_2(16)?)__rdd__",
     R"__rdd__(
This problem is simple enough to be solved directly by a single mathematical operation. <ANSWER>This is a unit problem.</ANSWER>)__rdd__"},
    {R"__rdd__(
Write the blueprint for a webpage view using the Vue3 framework about a study on salaries based on profession and age. The view must contain an initial text description of the study, a table with headers "Name", "Age", "Profession" and "Salary", as well as a picture slider. The data for the table will be available from a local JSON file, and the pictures for the slider will also be available locally.)__rdd__",
     R"__rdd__(
We can use the task decomposition strategy here by splitting the task into smaller independent tasks, consisting on creating Vue3 components for each element of the view. We can use two workers. The merged solution will be the code for the components generated when solving the sub-problems, as well as code for the view using such components.
<ANSWER>- Write code using the Vue3 framework for a component representing a table with headers "Name", "Age", "Profession" and "Salary". The data for the table will be available from a local JSON file.
- Write code using the Vue3 framework for a component representing a picture slider. The pictures for the slider will be available locally.</ANSWER>)__rdd__"},
    {R"__rdd__(
Write a Python function that takes the base and height of a triangle (two floating point numbers) and returns its area (also a floating point number).)__rdd__",
     R"__rdd__(
This problem is simple enough to be solved directly by writing a short Python function. <ANSWER>This is a unit problem.</ANSWER>)__rdd__"},
    {R"__rdd__(
Which word in the list [hush, oceanic, surge, present, lie, wry, giraffe, dine, guide, urge, complete, tasteless, glorious, bird, raspy, murky, zoom, juice, select, liquid, hope, install, complete, aromatic, oceanic, fish, excited, tail, internal, dinosaurs, noiseless, partner] is longer? If there is more than one word with the same length, any of them is a valid answer.)__rdd__",
     R"__rdd__(
We can use the data decomposition strategy here by splitting the input list of words into smaller lists. We can use three workers. Each of the list partitions will be approximately the same size. The merged solution will be the longest word out of all the sub-solutions.
<ANSWER>- Which word in the list [hush, oceanic, surge, present, lie, wry, giraffe, dine, guide, urge, complete] is longer? If there is more than one word with the same length, any of them is a valid answer.
- Which word in the list [tasteless, glorious, bird, raspy, murky, zoom, juice, select, liquid, hope, install] is longer? If there is more than one word with the same length, any of them is a valid answer.
- Which word in the list [complete, aromatic, oceanic, fish, excited, tail, internal, dinosaurs, noiseless, partner] is longer? If there is more than one word with the same length, any of them is a valid answer.</ANSWER>)__rdd__"},
    {R"__rdd__(
Which word in the list [cow, banana, ensemble, castle, wise] is longer?)__rdd__",
     R"__rdd__(
This problem is simple enough to be solved directly by performing a length comparison of only two words. <ANSWER>This is a unit problem.</ANSWER>)__rdd__"},
    {R"__rdd__(
Is the following sports-related sentence plausible? "Joao Moutinho caught the screen pass in the NFC championship.")__rdd__",
     R"__rdd__(
We can use the task decomposition strategy here by proposing questions to gather the information required to solve the original problem. We can use two workers. The merged solution will be "yes" if the resulting information of both Joao Moutinho and the NFC championship match, and "no" otherwise.
<ANSWER>- Which sport does Joao Moutinho play?
- To which sport does the NFC championship belong to?</ANSWER>)__rdd__"},
};

// Generic decomposition examples with identifiers and dependencies.
inline constexpr RawShot kGenericDecomposeDeps[] = {
    {R"__rdd__(
If Peter has 3 apples and gives 1 to John, how many apples does Peter have left?)__rdd__",
     R"__rdd__(
This problem is simple enough to be solved directly by a single mathematical operation. <ANSWER>This is a unit problem.</ANSWER>)__rdd__"},
    {R"__rdd__(
Who is the brother of the Sultan of Brunei married to?)__rdd__",
     R"__rdd__(
We can use the task decomposition strategy here by splitting the task into smaller tasks, in order to find out the necessary information to answer the main question. We can use two workers. The merged solution will be attained by using the intermediate information to solve the original question.
<ANSWER>- [P-1] Who is the Sultan of Brunei?
- [P-2] Who is the brother of {P-1}?
- [P-3] Who is married to {P-2}?</ANSWER>)__rdd__"},
    {R"__rdd__(
Solve for $y$: $\frac{4}{\log_2 8}x = \log_2 16 + 7$, $y = 3x$.)__rdd__",
     R"__rdd__(
We can use the task decomposition strategy here by splitting the task into simpler mathematical operations. We can use three workers. The merged solution will be attained by using the intermediate results to obtain a value for $y$.
<ANSWER>- [P-1] What is the result of $\frac{4}{\log_2 8}$?
- [P-2] What is the result of $\log_2 16 + 7$?
- [P-3] What is result of $\frac{{P-2}}{{P-1}}$?</ANSWER>)__rdd__"},
    {R"__rdd__(
Write the blueprint for a webpage view using the Vue3 framework about a study on salaries based on profession and age. The view must contain an initial text description of the study, a table with headers "Name", "Age", "Profession" and "Salary", as well as a picture slider. The data for the table will be available from a local JSON file, and the pictures for the slider will also be available locally.)__rdd__",
     R"__rdd__(
We can use the task decomposition strategy here by splitting the task into smaller tasks, consisting on creating Vue3 components for each element of the view. We can use two workers. The merged solution will be the code for the components generated when solving the sub-problems, as well as code for the view using such components.
<ANSWER>- [P-1] Write code using the Vue3 framework for a component representing a table with headers "Name", "Age", "Profession" and "Salary". The data for the table will be available from a local JSON file.
- [P-2] Write code using the Vue3 framework for a component representing a picture slider. The pictures for the slider will be available locally.</ANSWER>)__rdd__"},
    {R"__rdd__(
Write a Python function that takes the base and height of a triangle (two floating point numbers) and returns its area (also a floating point number).)__rdd__",
     R"__rdd__(
This problem is simple enough to be solved directly by writing a short Python function. <ANSWER>This is a unit problem.</ANSWER>)__rdd__"},
    {R"__rdd__(
Which is the oldest country out of Germany, Japan, Switzerland, Spain, Bolivia, Angola, Laos, Belgium, Canada, Mexico, Costa Rica, Indonesia, Pakistan and Rwanda?)__rdd__",
     R"__rdd__(
We can use the data decomposition strategy here by splitting the input data into evenly sized partitions and solving the same problem for each partition. We can use two workers. The merged solution will be oldest country out of all the sub-solutions.
<ANSWER>- [P-1] Which is the oldest country out of Germany, Japan, Switzerland, Spain, Bolivia, Angola and Laos?
- [P-2] Which is the oldest country out of Belgium, Canada, Mexico, Costa Rica, Indonesia, Pakistan and Rwanda?</ANSWER>)__rdd__"},
    {R"__rdd__(
Which is the oldest country out of Germany, Japan, Switzerland, Spain, Bolivia, Angola and Laos?)__rdd__",
     R"__rdd__(
We can use the task decomposition strategy here by performing different steps to obtain all required information to answer the question. We can use two workers. The merged solution will be the longest word out of all the sub-solutions.
<ANSWER>- [P-1] Create a list of country-age pairs for each country and their respective ages out of Germany, Japan, Switzerland, Spain, Bolivia, Angola and Laos.
- [P-2] Which is the country with the largest age, given the following list of country-age pairs: {P-1}?</ANSWER>)__rdd__"},
    {R"__rdd__(
Which word in the list [cow, banana, ensemble, castle, wise] is longer?)__rdd__",
     R"__rdd__(
This problem is simple enough to be solved directly by performing a length comparison of only five words. <ANSWER>This is a unit problem.</ANSWER>)__rdd__"},
};

// Merging examples, letter concatenation task.
inline constexpr RawShot kLetterConcatMerge[] = {
    {R"__rdd__(
Concatenate using a space the characters at index 1 of each word in the list [Orlando, Arif, Keith, Lyudmyla, Amin, Theresa, Stefan, Gilberto, Samina, Yoko, Katarzyna, Haiying, Saraswati, Theresa, Bernadette, Maung, Lopez, Pereira, Shaikh, Brown, Ortiz]; indices start at zero.
- Sub-problem 1: Concatenate using a space the characters at index 1 of each word in the list [Orlando, Arif, Keith, Lyudmyla, Amin]; indices start at zero. Sub-solution 1: "r r e y m".
- Sub-problem 2: Concatenate using a space the characters at index 1 of each word in the list [Theresa, Stefan, Gilberto, Samina, Yoko]; indices start at zero. Sub-solution 2: "h t i a o".
- Sub-problem 3: Concatenate using a space the characters at index 1 of each word in the list [Katarzyna, Haiying, Saraswati, Theresa, Bernadette]; indices start at zero. Sub-solution 3: "a a a h e".
- Sub-problem 4: Concatenate using a space the characters at index 1 of each word in the list [Maung, Lopez, Pereira, Shaikh, Brown, Ortiz]; indices start at zero. Sub-solution 4: "a o e h r r".)__rdd__",
     R"__rdd__(
"r r e y m h t i a o a a a h e a o e h r r")__rdd__"},
    {R"__rdd__(
Concatenate using a space the characters at index 2 of each word in the list [Lawal, Jadhav, Sekha, Jadhav, Abraham, Sushila, Hoang, Gerhard, Heinz]; indices start at zero.
- Sub-problem 1: Concatenate using a space the characters at index 2 of each word in the list [Lawal, Jadhav, Sekha, Jadhav]; indices start at zero. Sub-solution 1: "w d k d".
- Sub-problem 2: Concatenate using a space the characters at index 2 of each word in the list [Abraham, Sushila, Hoang, Gerhard]; indices start at zero. Sub-solution 2: "r s a r".
- Sub-problem 3: Concatenate using a space the characters at index 2 of each word in the list [Heinz]; indices start at zero. Sub-solution 3: "i".)__rdd__",
     R"__rdd__(
"w d k d r s a r i")__rdd__"},
    {R"__rdd__(
Concatenate using a space the characters at index 1 of each word in the list [Prem, Wilson, Ashraf, Gilberto, Shobha]; indices start at zero.
- Sub-problem 1: Concatenate using a space the characters at index 1 of each word in the list [Prem, Wilson, Ashraf]; indices start at zero. Sub-solution 1: "r i s".
- Sub-problem 2: Concatenate using a space the characters at index 1 of each word in the list [Gilberto, Shobha]; indices start at zero. Sub-solution 2: "i h".)__rdd__",
     R"__rdd__(
"r i s i h")__rdd__"},
    {R"__rdd__(
Concatenate using a space the characters at index 1 of each word in the list [Robin, Mostafa, Hadi, Gutierrez, Farooq, Nicolas, Alicia, Sandra, Xiaolin, Valerie]; indices start at zero.
- Sub-problem 1: Concatenate using a space the characters at index 1 of each word in the list [Robin, Mostafa, Hadi]; indices start at zero. Sub-solution 1: "o o a".
- Sub-problem 2: Concatenate using a space the characters at index 1 of each word in the list [Gutierrez, Farooq, Nicolas]; indices start at zero. Sub-solution 2: "u a i".
- Sub-problem 3: Concatenate using a space the characters at index 1 of each word in the list [Alicia, Sandra, Xiaolin, Valerie]; indices start at zero. Sub-solution 3: "l a i a".)__rdd__",
     R"__rdd__(
"o o a u a i l a i a")__rdd__"},
    {R"__rdd__(
Concatenate using a space the characters at index 1 of each word in the list [Cheng, Jianwei, Magdalena, Raimundo, Rosario, Raju, Orlando]; indices start at zero.
- Sub-problem 1: Concatenate using a space the characters at index 1 of each word in the list [Cheng, Jianwei, Magdalena]; indices start at zero. Sub-solution 1: "h i a".
- Sub-problem 2: Concatenate using a space the characters at index 1 of each word in the list [Raimundo, Rosario, Raju]; indices start at zero. Sub-solution 2: "a o a".
- Sub-problem 3: Concatenate using a space the characters at index 1 of each word in the list [Orlando]; indices start at zero. Sub-solution 3: "r".)__rdd__",
     R"__rdd__(
"h i a a o a r")__rdd__"},
};

// Generic merging examples.
inline constexpr RawShot kGenericMerge[] = {
    {R"__rdd__(
Who is younger: Michael Jordan, Cristiano Ronaldo or Usain Bolt?
- Sub-problem 1: How old is Cristiano Ronaldo? Sub-solution 1: 39 years old.
- Sub-problem 2: How old is Michael Jordan? Sub-solution 2: 61 years old.
- Sub-problem 3: How old is Usain Bolt? Sub-solution 3: 37 years old.)__rdd__",
     R"__rdd__(
We can obtain the solution to the original problem by comparing the ages given in the sub-solutions. Thus, the solution is <ANSWER>Usain Bolt</ANSWER>)__rdd__"},
    {R"__rdd__(
Peter had 3 apples, 7 oranges and 12 pears. He gave 1 apple to John, 4 oranges to Maria and 3 pears to Ana. How many pieces of fruit does Peter have left?
- Sub-problem 1: Peter had 3 apples and gave 1 to John. How many apples does Peter have left? Sub-solution 1: 2.
- Sub-problem 2: Peter had 7 oranges and gave 4 to Maria. How many oranges does Peter have left? Sub-solution 2: 3.
- Sub-problem 3: Peter had 12 pears and gave 3 to Ana. How many pears does Peter have left? Sub-solution 3: 9.)__rdd__",
     R"__rdd__(
We can obtain the solution to the original problem by adding up the pieces Peter has left for each type of fruit. These pieces are given by each sub-solution. Thus, the solution is 2 + 3 + 9 = <ANSWER>14</ANSWER>)__rdd__"},
    {R"__rdd__(
What is ((((5 + 4) * 100) + 267) / (3 * 10))?
- Sub-problem 1: What is ((5 + 4) * 100) + 267? Sub-solution 1: 1167.
- Sub-problem 2: What is 3 * 10? Sub-solution 2: 30.)__rdd__",
     R"__rdd__(
We can obtain the solution to the original problem by performing the operation $sub_solution_1 / sub_solution_2$. Thus, the solution is 1167 / 30 = <ANSWER>38.9</ANSWER>)__rdd__"},
    {R"__rdd__(
Which word in the list [hush, oceanic, surge, present, lie, wry, giraffe, dine, guide, urge, complete, tasteless, glorious, bird, raspy, murky, zoom, juice, select, liquid, hope, install, complete, aromatic, oceanic, fish, excited, fabricator, internal, dinosaurs, noiseless, partner] is longer?
- Sub-problem 1: Which word in the list [hush, oceanic, surge, present, lie, wry, giraffe, dine, guide, urge, complete] is longer? Sub-solution 1: complete.
- Sub-problem 2: Which word in the list [tasteless, glorious, bird, raspy, murky, zoom, juice, select, liquid, hope, install] is longer? Sub-solution 2: tasteless.
- Sub-problem 3: Which word in the list [complete, aromatic, oceanic, fish, excited, fabricator, internal, dinosaurs, noiseless, partner] is longer? Sub-solution 3: fabricator.)__rdd__",
     R"__rdd__(
We can obtain the solution to the original problem by taking the longest word out of the three sub-solutions. "complete" has 8 letters, "tasteless" has 9 letters and "fabricator" has 10 letters. Thus, the solution is <ANSWER>fabricator</ANSWER>)__rdd__"},
    {R"__rdd__(
Is the following sports-related sentence plausible? "Joao Moutinho caught the screen pass in the NFC championship."
- Sub-problem 1: Which sport does Joao Moutinho play? Sub-solution 1: Soccer.
- Sub-problem 2: To which sport does the NFC championship belong to? Sub-solution 2: American football.)__rdd__",
     R"__rdd__(
Joao Moutinho does not play the same sport that the NFC championship belongs to. Thus, the answer is <ANSWER>no</ANSWER>)__rdd__"},
};

} // namespace rdd::assets
