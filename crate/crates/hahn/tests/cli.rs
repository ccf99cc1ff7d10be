use hahn::cli::run;

fn hahn(args: &[&str]) -> hahn::cli::Outcome {
    run(std::iter::once("hahn").chain(args.iter().copied()))
}

#[test]
fn documented_examples() {
    let out = hahn(&["cmp", "3*x^2-5*x", "2*x^2+100"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "GT\n"));
    let out = hahn(&["decompose", "--field", "Q box lex(Z,Z)"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("degree: 2"));
    let out = hahn(&["derive", "x^3", "--at", "2"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "12\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(hahn(&["eval", "1/0*x"]).code, 2);
    assert_eq!(hahn(&["eval", "3*"]).code, 2);
    assert_eq!(hahn(&["cmp", "x"]).code, 2);
    assert_eq!(hahn(&["frobnicate"]).code, 2);
    assert_eq!(hahn(&["degree", "--field", "R box Z"]).code, 2);
    assert_eq!(hahn(&["level", "-x"]).code, 1);
    assert_eq!(hahn(&["sign", "O(x^0)"]).code, 1);
    assert_eq!(hahn(&["flatten", "x"]).code, 1);
    assert_eq!(hahn(&["derive", "x^-1", "--at", "0"]).code, 1);
    assert_eq!(hahn(&["--help"]).code, 0);
}

#[test]
fn verbs() {
    let out = |args: &[&str]| hahn(args).stdout;
    assert_eq!(out(&["eval", "(x+1)*(x-1)"]), "x^2 - 1\n");
    assert_eq!(
        out(&["eval", "--depth", "2", "1/(1+x^-1)"]),
        "1 - x^-1 + x^-2 + O(x^-3)\n"
    );
    assert_eq!(out(&["sign", "-x^-1+x^-2"]), "negative\n");
    assert_eq!(
        out(&["sign", "--field", "Q box lex(Z,Z)", "x^(0,1)-x^(1,0)"]),
        "positive\n"
    );
    assert_eq!(out(&["level", "--field", "Q box Q", "2*x^(1/2)+x"]), "1\n");
    assert_eq!(out(&["level", "x", "5*x"]), "equivalent (6,6)\n");
    assert_eq!(out(&["level", "x^2", "x"]), "inequivalent\n");
    assert_eq!(out(&["gen", "--field", "Q box Z box Q"]), "class0\nclass1\n");
    assert_eq!(out(&["degree", "--field", "Q"]), "0\n");
    assert_eq!(out(&["degree", "--field", "Q box lex(Z,1,Q)"]), "2\n");
    assert_eq!(
        out(&["flatten", "--field", "Q box Z box Z", "x^(1,0)+x^(0,1)"]),
        "(1)*z + (y)\n"
    );
    assert_eq!(out(&["derive", "3*x^2-5*x+1", "--at", "1/2"]), "-2\n");
}

#[test]
fn json_output() {
    let out = hahn(&["decompose", "--field", "Q box Z box Z", "--output", "json"]);
    assert_eq!(
        out.stdout,
        "{\"arch\":\"Q\",\"degree\":2,\"classes\":[{\"id\":0,\"class_group\":\"Z\"},{\"id\":1,\"class_group\":\"Z\"}],\"level_group\":\"lex(Z,Z)\"}\n"
    );
    assert_eq!(
        hahn(&["cmp", "x", "2", "--output", "json"]).stdout,
        "{\"cmp\":\"GT\"}\n"
    );
    assert_eq!(hahn(&["degree", "--output", "json"]).stdout, "{\"degree\":1}\n");
}

#[test]
fn beta_check_is_reproducible() {
    let args = [
        "beta-check",
        "--field",
        "Q box lex(Z,Q)",
        "--samples",
        "40",
        "--seed",
        "11",
        "--output",
        "json",
    ];
    let a = hahn(&args);
    let b = hahn(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a, b);
    assert!(a
        .stdout
        .starts_with("[{\"axiom\":1,\"samples_run\":40,\"failures\":[]}"));
}
