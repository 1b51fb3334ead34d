pub struct Action;
pub struct Groupoid;
