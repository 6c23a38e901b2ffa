use orelab::corpus::{Corpus, CorpusEntry, Provenance};
use orelab::format::to_text;
use orelab_core::ore::{enumerate_5_ore, OreRecognizer};
use orelab_core::families;

#[test]
fn write_then_read_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = Corpus::create(dir.path()).unwrap();
    let mut rec = OreRecognizer::new();
    let mut written = Vec::new();
    for class in enumerate_5_ore(9) {
        let e = CorpusEntry::new(&class.graph, Provenance::Recipe { recipe: class.recipe.to_string() }, &mut rec);
        assert!(corpus.insert(&e).unwrap());
        written.push(e);
    }
    let e = CorpusEntry::new(&families::mycielski_groetzsch(), Provenance::Named { name: "mycielski_groetzsch".into() }, &mut rec);
    corpus.insert(&e).unwrap();
    written.push(e);
    written.sort_by(|a, b| a.key.cmp(&b.key));

    let reopened = Corpus::open(dir.path()).unwrap();
    let read = reopened.entries().unwrap();
    assert_eq!(read, written);
    for e in &read {
        let g = e.parse_graph().unwrap();
        assert_eq!(to_text(&g), e.graph);
        let path = dir.path().join("entries").join(format!("{}.toml", e.key));
        assert_eq!(std::fs::read_to_string(path).unwrap(), e.to_toml());
    }
}

#[test]
fn insert_is_idempotent_and_find_by_prefix() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = Corpus::create(dir.path()).unwrap();
    let mut rec = OreRecognizer::new();
    let g = families::c5_join_k2();
    let e = CorpusEntry::new(&g, Provenance::Named { name: "c5_join_k2".into() }, &mut rec);
    assert!(corpus.insert(&e).unwrap());
    let relabeled = g.permuted(&[6, 5, 4, 3, 2, 1, 0]);
    let again = CorpusEntry::new(&relabeled, Provenance::File { path: "x".into() }, &mut rec);
    assert!(!corpus.insert(&again).unwrap());
    assert_eq!(corpus.keys().unwrap().len(), 1);
    assert_eq!(corpus.find(&e.key[..4]).unwrap(), e);
    assert!(corpus.find("zz").is_err());
}

#[test]
fn ledger_appends() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = Corpus::create(dir.path()).unwrap();
    corpus.append_ledger(&["a".into()]).unwrap();
    corpus.append_ledger(&["b".into(), "c".into()]).unwrap();
    assert_eq!(std::fs::read_to_string(dir.path().join("ledger.log")).unwrap(), "a\nb\nc\n");
}

#[test]
fn open_requires_a_corpus() {
    let dir = tempfile::tempdir().unwrap();
    assert!(Corpus::open(dir.path().join("missing")).is_err());
}
