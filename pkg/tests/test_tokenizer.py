import pytest
from hypothesis import given
from hypothesis import strategies as st

from projeval.errors import TokenizeError
from projeval.metrics import comment_lines, count_lines, tokenize


def round_trip(text: str) -> str:
    return "".join(t.value for t in tokenize(text))


@pytest.mark.parametrize(
    "name",
    [
        "tiny/src/tiny/Animal.java",
        "tiny/src/tiny/Dog.java",
        "tiny/src/tiny/TrainingException.java",
        "comments/Notes.java",
        "comments/Block.java",
        "exc/MyException.java",
        "exc/Reader.java",
    ],
)
def test_fixture_files_round_trip_byte_for_byte(fixtures_dir, name):
    text = (fixtures_dir / name).read_text()
    assert round_trip(text) == text


def test_kinds_on_a_small_snippet():
    kinds = [t.kind for t in tokenize('int x = 1; // done\n"s"')]
    assert kinds == [
        "word", "whitespace", "word", "whitespace", "punct", "whitespace",
        "number", "punct", "whitespace", "line_comment", "whitespace", "string",
    ]


def test_comments_and_literals_stay_single_tokens():
    text = 'a /* x\ny */ b "q // not a comment" \'c\''
    tokens = [t for t in tokenize(text) if not t.is_trivia or t.kind != "whitespace"]
    values = [t.value for t in tokens]
    assert "/* x\ny */" in values
    assert '"q // not a comment"' in values
    assert "'c'" in values


def test_string_escapes():
    tokens = tokenize(r'"a \" b" + "\\"')
    strings = [t.value for t in tokens if t.kind == "string"]
    assert strings == [r'"a \" b"', r'"\\"']


def test_line_numbers():
    tokens = tokenize("a\nbb\n\nccc")
    words = {t.value: t.line for t in tokens if t.kind == "word"}
    assert words == {"a": 1, "bb": 2, "ccc": 4}


def test_unterminated_block_comment_rejected():
    with pytest.raises(TokenizeError):
        tokenize("int a; /* never closed")


def test_unterminated_string_rejected():
    with pytest.raises(TokenizeError):
        tokenize('String s = "open')


def test_count_lines():
    assert count_lines("") == 0
    assert count_lines("one") == 1
    assert count_lines("one\ntwo\n") == 2
    assert count_lines("one\ntwo\nthree") == 3


def test_comment_lines_on_fixtures(fixtures_dir):
    notes = tokenize((fixtures_dir / "comments/Notes.java").read_text())
    assert comment_lines(notes) == 3
    block = tokenize((fixtures_dir / "comments/Block.java").read_text())
    assert comment_lines(block) == 3


def test_comment_lines_counts_each_line_once():
    # a block comment and a line comment sharing line 2
    tokens = tokenize("a\n/* b */ // c\nd")
    assert comment_lines(tokens) == 1


@given(st.text(max_size=200))
def test_tokenizer_either_rejects_or_round_trips(text):
    try:
        tokens = tokenize(text)
    except TokenizeError:
        return
    assert "".join(t.value for t in tokens) == text
